"""
Matrix representations of braid groups.
"""

from lens_alexander.representations.burau import (
    ColorAssignment,
    MixedColoring,
    RelationCheck,
    colored_burau_word,
    reduced_burau_generator,
    rho_generator,
    rho_relations_hold,
    rho_word,
)

__all__ = [
    "ColorAssignment",
    "MixedColoring",
    "RelationCheck",
    "colored_burau_word",
    "reduced_burau_generator",
    "rho_generator",
    "rho_relations_hold",
    "rho_word",
]
