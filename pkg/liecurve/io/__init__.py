"""Algebra documents and report rendering"""
