"""Utility modules"""

from liecurve.utils.logging import setup_logging

__all__ = ["setup_logging"]
