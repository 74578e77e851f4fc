"""Curvature engine: generic metric Lie algebras, CH^n, Lie hypersurfaces, plane search"""
