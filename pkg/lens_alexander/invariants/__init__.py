"""
Alexander polynomial pipelines.
"""

from lens_alexander.invariants.alexander import (
    AlexResult,
    SurgeryParams,
    alex_classical_knot,
    alex_classical_multivariable,
    alex_from_surgery,
    alex_lens,
    alex_solid_torus,
    alex_with_axis,
    multivariable_ring,
    solid_torus_determinant,
    torres_reduce,
    verify_lens,
)

__all__ = [
    "AlexResult",
    "SurgeryParams",
    "alex_classical_knot",
    "alex_classical_multivariable",
    "alex_from_surgery",
    "alex_lens",
    "alex_solid_torus",
    "alex_with_axis",
    "multivariable_ring",
    "solid_torus_determinant",
    "torres_reduce",
    "verify_lens",
]
