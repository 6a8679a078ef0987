"""
Braid words, strand permutations and the braid grammar.
"""

from lens_alexander.braids.parser import parse_braid, parse_plain_braid
from lens_alexander.braids.words import (
    BraidLetter,
    BraidRelation,
    ComponentPartition,
    GeneratorKind,
    MixedBraidWord,
    PlainBraidWord,
    StrandPermutation,
    relation_pairs,
)

__all__ = [
    "BraidLetter",
    "BraidRelation",
    "ComponentPartition",
    "GeneratorKind",
    "MixedBraidWord",
    "PlainBraidWord",
    "StrandPermutation",
    "parse_braid",
    "parse_plain_braid",
    "relation_pairs",
]
