"""
Logging configuration for sctool.

Logs go to standard error (standard output carries reports) and, optionally,
to a file.
Author: DmitrTRC
"""

import logging
import sys
from typing import Optional

from sctool.infrastructure.config.settings import Settings, get_settings


def setup_logging(settings: Optional[Settings] = None) -> None:
    """
    Configure logging for the application.

    Args:
        settings: Settings to use. If None, uses the global settings.
    """
    settings = settings or get_settings()

    if settings.debug:
        log_level = logging.DEBUG
        log_format = "%(asctime)s | %(levelname)-8s | %(name)s:%(lineno)d | %(message)s"
    else:
        log_level = logging.getLevelName(settings.log_level)
        log_format = "%(asctime)s | %(levelname)-8s | %(message)s"

    formatter = logging.Formatter(log_format, datefmt="%Y-%m-%d %H:%M:%S")

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if settings.log_file is not None:
        settings.log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(settings.log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    logger = logging.getLogger(__name__)
    logger.debug("Log Level: %s", logging.getLevelName(log_level))
    logger.debug("Log File: %s", settings.log_file)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)
