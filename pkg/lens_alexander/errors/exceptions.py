"""
Custom exception classes for the lens_alexander package.
"""

from typing import Any, Dict, Optional


class LensAlexanderError(Exception):
    """Base class for all Lens Alexander exceptions."""
    pass


class BraidSyntaxError(LensAlexanderError):
    """Malformed braid word text."""

    def __init__(self, position: int, message: str):
        self.position = position
        self.message = message
        super().__init__(f"{message} (at position {position})")


class IndexOutOfRangeError(LensAlexanderError):
    """Generator index outside the braid group's range."""
    pass


class SizeMismatchError(LensAlexanderError):
    """Incompatible matrix or word dimensions."""
    pass


class NotUnimodularError(LensAlexanderError):
    """Matrix determinant is not a unit of the Laurent ring."""
    pass


class InvalidSurgeryError(LensAlexanderError):
    """Surgery coefficients do not describe a lens space."""
    pass


class NotAKnotError(LensAlexanderError):
    """A knot-only formula was applied to a closure with several components."""
    pass


class ConfigError(LensAlexanderError):
    """Invalid environment configuration."""
    pass


class BusinessError(LensAlexanderError):
    """Base class for computational findings that are reported as data."""

    def __init__(self, code: str, message: str, details: Optional[Dict[str, Any]] = None):
        self.code = code
        self.message = message
        self.details = details or {}
        super().__init__(message)


class NotDivisibleError(BusinessError):
    """Exact Laurent division left a remainder."""

    def __init__(self, dividend: Any, divisor: Any, context: Optional[str] = None):
        details = {"dividend": str(dividend), "divisor": str(divisor)}
        if context:
            details["context"] = context
        super().__init__(
            "not_divisible",
            f"{dividend} is not divisible by {divisor}",
            details,
        )


class OracleDisagreementError(BusinessError):
    """The Fox oracle and the Burau route produced different associates."""

    def __init__(self, burau: Any, oracle: Any, word: str):
        super().__init__(
            "oracle_disagreement",
            f"oracle disagrees on '{word}': burau {burau}, fox {oracle}",
            {"word": word, "burau": str(burau), "oracle": str(oracle)},
        )
