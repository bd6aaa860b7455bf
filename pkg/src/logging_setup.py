"""Logging configuration for the flagtwist command line."""

import logging
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

PACKAGE_LOGGER = "src"

_handler: Optional[RichHandler] = None


def configure_logging(level: Union[str, int] = "WARNING") -> logging.Logger:
    """
    Route the package's log records to stderr through a RichHandler.

    The handler is installed once; later calls only change the level.

    Raises:
        ValueError: If level is not a logging level name
    """
    global _handler
    if isinstance(level, str):
        numeric = logging.getLevelName(level.upper())
        if not isinstance(numeric, int):
            raise ValueError(f"Unknown log level {level!r}")
        level = numeric

    logger = logging.getLogger(PACKAGE_LOGGER)
    if _handler is None:
        _handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
        _handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(_handler)
        logger.propagate = False
    logger.setLevel(level)
    _handler.setLevel(level)
    return logger
