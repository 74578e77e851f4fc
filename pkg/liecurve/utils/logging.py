"""Logging configuration utilities"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from liecurve.config.manager import ConfigManager


def setup_logging(level=None):
    """Configure the root logger: stderr console handler plus an optional rotating file

    stdout stays reserved for reports and CSV output.
    """
    config = ConfigManager()

    log_level_str = (level or config.get_log_level()).upper()
    log_level = getattr(logging, log_level_str, logging.WARNING)
    log_format = config.get_setting('logging', 'format',
                                    default='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    formatter = logging.Formatter(log_format)

    handlers = []

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    handlers.append(console_handler)

    if config.get_setting('logging', 'file_enabled', default=False):
        log_dir = config.get_setting('paths', 'logs_directory', default='.config/logs')
        os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(
            os.path.join(log_dir, 'liecurve.log'),
            maxBytes=1_000_000,
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    logging.basicConfig(
        level=log_level,
        format=log_format,
        handlers=handlers,
        force=True
    )

    logger = logging.getLogger(__name__)
    logger.debug("Logging initialized - Level: %s, Handlers: %d", log_level_str, len(handlers))
    return logger
