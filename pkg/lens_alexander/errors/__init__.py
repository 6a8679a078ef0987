"""
Errors package for Lens Alexander.
"""

from lens_alexander.errors.exceptions import (
    BraidSyntaxError,
    BusinessError,
    ConfigError,
    IndexOutOfRangeError,
    InvalidSurgeryError,
    LensAlexanderError,
    NotAKnotError,
    NotDivisibleError,
    NotUnimodularError,
    OracleDisagreementError,
    SizeMismatchError,
)

__all__ = [
    "BraidSyntaxError",
    "BusinessError",
    "ConfigError",
    "IndexOutOfRangeError",
    "InvalidSurgeryError",
    "LensAlexanderError",
    "NotAKnotError",
    "NotDivisibleError",
    "NotUnimodularError",
    "OracleDisagreementError",
    "SizeMismatchError",
]
