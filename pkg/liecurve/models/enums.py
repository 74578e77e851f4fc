"""Enumeration types for reports and output"""

from enum import Enum


class ExtremumMethod(Enum):
    """How an extremal sectional curvature was obtained"""
    CLOSED = "closed"
    SEARCH = "search"


class OutputFormat(Enum):
    """Rendering of single-point reports"""
    JSON = "json"
    TEXT = "text"
