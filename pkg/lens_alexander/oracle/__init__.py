"""
Fox-calculus oracle for cross-checking the Burau pipelines.
"""

from lens_alexander.oracle.fox import (
    FreeWord,
    GroupPresentation,
    GroupRingElement,
    alexander_fox_matrix,
    artin_action,
    closure_presentation,
    elementary_ideal_gcd,
    eta_abelianize,
    fox_derivative,
    oracle_multivariable,
    oracle_two_variable,
)

__all__ = [
    "FreeWord",
    "GroupPresentation",
    "GroupRingElement",
    "alexander_fox_matrix",
    "artin_action",
    "closure_presentation",
    "elementary_ideal_gcd",
    "eta_abelianize",
    "fox_derivative",
    "oracle_multivariable",
    "oracle_two_variable",
]
