#!/usr/bin/env python3
"""
Logging Setup
Colored console logging on stderr and an optional rotating JSON log file
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

import coloredlogs
from pythonjsonlogger import jsonlogger

from src.settings import Settings

_HANDLER_MARK = "_induced3lie"


def setup_logging(settings: Settings) -> None:
    """Install handlers on the root logger; calling again replaces them"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, _HANDLER_MARK, False):
            root.removeHandler(handler)

    level = getattr(logging, settings.log_level)
    root.setLevel(level)

    coloredlogs.install(level=level, fmt=settings.log_format, stream=sys.stderr, logger=root, reconfigure=True)
    for handler in root.handlers:
        if isinstance(handler, logging.StreamHandler) and getattr(handler, "stream", None) is sys.stderr:
            setattr(handler, _HANDLER_MARK, True)

    if settings.log_file:
        directory = os.path.dirname(settings.log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = RotatingFileHandler(
            settings.log_file,
            maxBytes=settings.log_max_size,
            backupCount=settings.log_backup_count,
        )
        if settings.log_json:
            file_handler.setFormatter(jsonlogger.JsonFormatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
        else:
            file_handler.setFormatter(logging.Formatter(settings.log_format))
        setattr(file_handler, _HANDLER_MARK, True)
        root.addHandler(file_handler)

    logging.getLogger(__name__).debug(f"logging configured at {settings.log_level}")
