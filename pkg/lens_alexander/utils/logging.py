"""
Logging utilities for the lens_alexander package.

Log output goes to stderr so stdout carries computed results only.
"""

import logging
import sys

import structlog
from colorama import Fore, Style, init as colorama_init


colorama_init()

_LEVEL_COLORS = {
    "DEBUG": Fore.BLUE,
    "INFO": Fore.GREEN,
    "WARNING": Fore.YELLOW,
    "ERROR": Fore.RED,
    "CRITICAL": Fore.MAGENTA,
}


def add_colors(_, __, event_dict: dict) -> dict:
    """
    Add colors to log level.

    Args:
        event_dict: The event dictionary to process

    Returns:
        Modified event dictionary with colored level
    """
    level = event_dict.get("level", "info").upper()
    color = _LEVEL_COLORS.get(level)
    event_dict["colored_level"] = f"{color}{level}{Style.RESET_ALL}" if color else level
    return event_dict


def parse_log_level(name: str) -> int:
    """
    Translate a level name such as ``"debug"`` into a ``logging`` constant.

    Raises:
        ValueError: If the name is not a standard level
    """
    level = logging.getLevelName(name.strip().upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {name}")
    return level


def _stderr_logger(*_args) -> structlog.PrintLogger:
    # sys.stderr is looked up per logger, not at configure time.
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(log_level: int = logging.INFO) -> None:
    """
    Configure structured logging.

    Args:
        log_level: The minimum log level to display
    """
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            add_colors,
            structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M:%S"),
            structlog.dev.ConsoleRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        context_class=dict,
        logger_factory=_stderr_logger,
    )


def get_logger(name: str = "lens_alexander"):
    """
    Get a logger instance.

    Args:
        name: The logger name

    Returns:
        Configured logger instance
    """
    return structlog.get_logger(name)
