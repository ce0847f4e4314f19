"""Centralized logging configuration for tipdetect.

Loggers inside the package share one stderr handler installed on the
package root, so a single ``set_log_level`` call (the CLI's ``--log-level``)
governs every module.

Usage:
    from src.tipdetect.logger import get_logger
    logger = get_logger(__name__)
    logger.info("Processed 120 frames")
"""

import logging

PACKAGE_LOGGER = "src.tipdetect"

_FORMAT = "%(asctime)s | %(name)s | %(levelname)s | %(message)s"
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _attach_handler(logger: logging.Logger) -> None:
    if logger.handlers:
        return
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATE_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)


def _in_package(name: str) -> bool:
    return name == PACKAGE_LOGGER or name.startswith(PACKAGE_LOGGER + ".")


def get_logger(name: str) -> logging.Logger:
    """Get a configured logger for the given module name.

    Args:
            name: Module name (use __name__ from calling module)

    Returns:
            Package loggers inherit the package root's handler and level;
            any other name gets its own stderr handler
    """

    if _in_package(name):
        _attach_handler(logging.getLogger(PACKAGE_LOGGER))
        return logging.getLogger(name)

    logger = logging.getLogger(name)
    _attach_handler(logger)
    return logger


def set_log_level(level: int | str) -> None:
    """Set the level of the package root logger.

    Args:
            level: Logging level name ("DEBUG") or number (logging.DEBUG)

    Raises:
            ValueError: If the level name is unknown
    """

    if isinstance(level, str):
        resolved = logging.getLevelName(level.upper())
        if not isinstance(resolved, int):
            raise ValueError(f"Unknown log level: {level}")
        level = resolved

    root = get_logger(PACKAGE_LOGGER)
    root.setLevel(level)
