"""
Environment-driven settings.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Mapping, Optional

from lens_alexander.errors.exceptions import ConfigError
from lens_alexander.utils.logging import parse_log_level

THREADS_VAR = "LENS_ALEX_THREADS"
LOG_LEVEL_VAR = "LENS_ALEX_LOG_LEVEL"
VERIFY_VAR = "LENS_ALEX_VERIFY"

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


@dataclass(frozen=True)
class Settings:
    """
    Process-wide settings.

    Attributes:
        threads: Upper bound on batch worker threads
        log_level: Minimum ``logging`` level for structured logs
        verify_paths: Compute both lens routes and compare them
    """

    threads: int = field(default_factory=_default_threads)
    log_level: int = logging.INFO
    verify_paths: bool = False

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Build settings from environment variables.

        Args:
            environ: Mapping to read instead of ``os.environ``

        Returns:
            Validated settings

        Raises:
            ConfigError: If any variable holds an invalid value
        """
        env = os.environ if environ is None else environ

        threads = _default_threads()
        raw_threads = env.get(THREADS_VAR)
        if raw_threads is not None and raw_threads.strip():
            try:
                threads = int(raw_threads)
            except ValueError:
                raise ConfigError(f"{THREADS_VAR} must be an integer, got '{raw_threads}'")
            if threads < 1:
                raise ConfigError(f"{THREADS_VAR} must be at least 1, got {threads}")

        log_level = logging.INFO
        raw_level = env.get(LOG_LEVEL_VAR)
        if raw_level is not None and raw_level.strip():
            try:
                log_level = parse_log_level(raw_level)
            except ValueError as e:
                raise ConfigError(f"{LOG_LEVEL_VAR}: {e}")

        raw_verify = env.get(VERIFY_VAR, "").strip().lower()
        if raw_verify in _TRUE:
            verify = True
        elif raw_verify in _FALSE:
            verify = False
        else:
            raise ConfigError(f"{VERIFY_VAR} must be a boolean flag, got '{raw_verify}'")

        return cls(threads=threads, log_level=log_level, verify_paths=verify)
