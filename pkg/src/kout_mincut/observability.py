"""Logging setup for the kout_mincut package."""

import logging
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from kout_mincut.domain.exceptions import ConfigurationValidationError

PACKAGE_LOGGER = "kout_mincut"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def resolve_log_level(level: str) -> str:
    """Upper-case a level name and check it is one of :data:`LOG_LEVELS`."""
    name = str(level).upper()
    if name not in LOG_LEVELS:
        raise ConfigurationValidationError(
            f"unknown log level '{level}'",
            config_key="log_level",
            expected_type=f"one of {', '.join(LOG_LEVELS)}",
        )
    return name


def setup_logging(level: str = "INFO", log_file: Path | None = None) -> logging.Logger:
    """
    Attach handlers to the package logger.

    Safe to call more than once; earlier handlers installed here are replaced.

    Args:
        level: Logging level name
        log_file: Optional file receiving plain-text records as well

    Returns:
        The configured package logger

    Raises:
        ConfigurationValidationError: If ``level`` is not a known level name
    """
    level = resolve_log_level(level)
    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        if getattr(handler, "_kout_managed", False):
            logger.removeHandler(handler)
            handler.close()

    console_handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    console_handler._kout_managed = True
    logger.addHandler(console_handler)

    if log_file is not None:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        file_handler._kout_managed = True
        logger.addHandler(file_handler)

    logger.setLevel(level)
    return logger
