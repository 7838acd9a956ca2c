"""
utils/logger.py

Loguru configuration of the command line tool. Every log line goes to
standard error; standard output carries only command results.

Classes:
    - InterceptHandler: Forwards standard-library records (numpy, scipy, warnings) to loguru.

Functions:
    - format_record: Loguru format callable that appends a bound payload.
    - init_logging: Configure the stderr sink.
"""

import logging
import sys
from pprint import pformat
from typing import Union

import numpy as np
from loguru import logger

LINE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <7}</level> | "
    "<cyan>{name}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)


class InterceptHandler(logging.Handler):
    """
    Redirects records of the standard `logging` module to loguru, keeping the
    caller location of the original record.
    """

    def emit(self, record: logging.LogRecord):
        try:
            level: Union[str, int] = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame is not None and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def _summarize(value):
    if isinstance(value, np.ndarray):
        return np.array2string(value, precision=4, threshold=16, edgeitems=2)
    if isinstance(value, dict):
        return {key: _summarize(item) for key, item in value.items()}
    return value


def format_record(record: dict) -> str:
    """
    Build the format string of one record. A payload bound with
    `logger.bind(payload=...)` is pretty-printed below the message; arrays
    inside it are abbreviated.

    Args:
        record (dict): The loguru record.

    Returns:
        str: The format string for this record.
    """
    format_string = LINE_FORMAT
    payload = record["extra"].get("payload")
    if payload is not None:
        record["extra"]["payload"] = pformat(
            _summarize(payload), indent=2, compact=True, width=88
        )
        format_string += "\n<level>{extra[payload]}</level>"
    return format_string + "{exception}\n"


def init_logging(level: Union[str, int] = logging.INFO):
    """
    Route `warnings` and standard-library loggers through loguru and install
    the stderr sink.

    Args:
        level (Union[str, int]): Minimum level emitted by the sink.

    Raises:
        ValueError: If `level` names no loguru level.
    """
    logging.captureWarnings(True)
    intercept_handler = InterceptHandler()
    logging.root.handlers = [intercept_handler]
    logging.root.setLevel(logging.WARNING)

    if isinstance(level, str):
        level = level.upper()
    logger.configure(handlers=[{"sink": sys.stderr, "level": level, "format": format_record}])
