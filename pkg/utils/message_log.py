# -*- coding: utf-8 -*-
"""
Message log for the CN Complex toolkit
One entry point taking (message, level) under a fixed tag
"""

import logging
from enum import Enum

TAG = "CN Complex"


class Level(Enum):
    INFO = logging.INFO
    WARNING = logging.WARNING
    CRITICAL = logging.CRITICAL
    # logged at INFO with a check mark
    SUCCESS = logging.INFO + 1


logging.addLevelName(Level.SUCCESS.value, "SUCCESS")

_logger = logging.getLogger(TAG)


def configure_logging(level: str = 'INFO') -> logging.Logger:
    """Install a stream handler once and set the level"""
    if not _logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('%(asctime)s [%(name)s] %(levelname)s: %(message)s'))
        _logger.addHandler(handler)
    _logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))
    return _logger


def log_message(message: str, level: Level = Level.INFO) -> None:
    """Log a message under the toolkit tag"""
    _logger.log(level.value, message)
