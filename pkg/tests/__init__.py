"""Test suite for liecurve"""
