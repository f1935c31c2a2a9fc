"""
loggers.py

Named loggers for every component. Records go to stderr, since stdout carries the
JSON reports and CSV tables of the command line, and to BE_LOG_DIR/<logger_name>
when that directory is set.
"""
import logging
import os
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s [%(levelname)s] - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _attach(logger: logging.Logger, handler: logging.Handler) -> None:
    handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    logger.addHandler(handler)


def setup_custom_logging(log_file_path: Optional[str], logger_name: str) -> logging.Logger:
    """
    Sets up a component logger.
    :param log_file_path: Directory for the log file, created on demand. No file handler when None or empty.
    :param logger_name: Logger name, also the log file name.
    :return: The configured logger.
    """
    logger = logging.getLogger(name=logger_name)
    logger.setLevel(logging.INFO)
    logger.propagate = False  # keeps records out of the root logger

    if logger.handlers:
        return logger
    if log_file_path:
        directory = Path(log_file_path)
        directory.mkdir(parents=True, exist_ok=True)
        _attach(logger, logging.FileHandler(directory / logger_name, encoding="utf-8"))
    _attach(logger, logging.StreamHandler(sys.stderr))
    return logger


def get_logger(logger_name: str) -> logging.Logger:
    """Module-level loggers: BE_LOG_DIR, read at import time, selects the file directory."""
    return setup_custom_logging(os.getenv("BE_LOG_DIR"), logger_name)
