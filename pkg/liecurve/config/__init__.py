"""Configuration management"""

from liecurve.config.manager import ConfigManager

__all__ = ["ConfigManager"]
