"""
Burau-type matrix representations.

``rho`` represents the mixed braid group B_(1,n) by n x n matrices over
ZZ[fixed^±1, moving^±1]. It is the coloured reduced Burau representation of
the embedded classical braid, with the fixed strand coloured ``fixed`` and
every moving strand coloured ``moving``.

Crossing colour rule for the coloured reduced Burau representation: letters
are multiplied left-to-right in reading order; ``s_i`` uses the colour at
position i, ``s_i^-1`` the colour at position i+1.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple

from lens_alexander.algebra.laurent import LaurentPoly, Ring, VarId
from lens_alexander.algebra.linalg import RingMatrix
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
from lens_alexander.errors.exceptions import IndexOutOfRangeError, SizeMismatchError


@dataclass(frozen=True)
class MixedColoring:
    """
    Which ring variables colour the fixed and the moving strands.

    The default uses ``a`` for the fixed strand and ``b`` for moving strands.
    """

    ring: Ring
    fixed: VarId
    moving: VarId

    def __post_init__(self):
        if self.fixed == self.moving:
            raise ValueError("Fixed and moving colours must differ")
        self.ring.index_of(self.fixed)
        self.ring.index_of(self.moving)

    @classmethod
    def named(cls, fixed: str = "a", moving: str = "b") -> "MixedColoring":
        ring = Ring((fixed, moving)) if fixed < moving else Ring((moving, fixed))
        return cls(ring, ring.var(fixed), ring.var(moving))

    @classmethod
    def default(cls) -> "MixedColoring":
        return cls.named()

    def colors(self, n: int) -> "ColorAssignment":
        """Position colours of the embedded braid: fixed first, then n moving."""
        return ColorAssignment(self.ring, (self.fixed,) + (self.moving,) * n)


@dataclass(frozen=True)
class ColorAssignment:
    """Colour of each strand position of a classical braid, bottom to top."""

    ring: Ring
    labels: Tuple[VarId, ...]

    def __post_init__(self):
        for v in self.labels:
            self.ring.index_of(v)

    @classmethod
    def uniform(cls, ring: Ring, var: VarId, m: int) -> "ColorAssignment":
        return cls(ring, (var,) * m)

    @classmethod
    def by_component(
        cls, ring: Ring, partition: ComponentPartition, variables: Sequence[VarId]
    ) -> "ColorAssignment":
        """Colour every position by its closure component's variable."""
        if len(variables) != partition.nu:
            raise SizeMismatchError(
                f"{partition.nu} components but {len(variables)} colour variables"
            )
        return cls(ring, tuple(variables[c] for c in partition.labels()))

    @property
    def m(self) -> int:
        return len(self.labels)


def reduced_burau_generator(i: int, label: LaurentPoly, m: int) -> RingMatrix:
    """
    Reduced Burau matrix of ``s_i`` in B_m with crossing colour ``label``.

    The ``(m-1) x (m-1)`` identity with row i replaced by
    ``(label, -label, 1)`` in columns i-1, i, i+1, truncated at the edges.
    """
    if not 1 <= i < m:
        raise IndexOutOfRangeError(f"s{i} is not a generator of B_{m}")
    ring = label.ring
    size = m - 1
    rows: List[List[object]] = [[int(r == c) for c in range(size)] for r in range(size)]
    row = [0] * size
    if i >= 2:
        row[i - 2] = label
    row[i - 1] = -label
    if i < size:
        row[i] = 1
    rows[i - 1] = row
    return RingMatrix.from_rows(ring, rows)


@lru_cache(maxsize=4096)
def _burau_letter(i: int, exponent: int, label: LaurentPoly, m: int) -> RingMatrix:
    mat = reduced_burau_generator(i, label, m)
    return mat if exponent == 1 else mat.invert_unimodular()


def colored_burau_word(
    w: PlainBraidWord, colors: ColorAssignment
) -> Tuple[RingMatrix, StrandPermutation]:
    """
    Coloured reduced Burau matrix of a classical braid.

    Args:
        w: Braid on ``m`` strands
        colors: One colour per bottom position

    Returns:
        ``(matrix, permutation)``; the matrix is ``(m-1) x (m-1)``
    """
    if colors.m != w.m:
        raise SizeMismatchError(f"{colors.m} colours for a braid on {w.m} strands")
    ring = colors.ring
    state = [ring.gen(v) for v in colors.labels]
    product = RingMatrix.identity(ring, w.m - 1)
    for i, e in w.letters:
        under = state[i - 1] if e == 1 else state[i]
        product = product @ _burau_letter(i, e, under, w.m)
        state[i - 1], state[i] = state[i], state[i - 1]
    return product, w.permutation()


@lru_cache(maxsize=1024)
def rho_generator(letter: BraidLetter, n: int, coloring: Optional[MixedColoring] = None) -> RingMatrix:
    """
    ``rho`` of a single letter of B_(1,n).

    ``rho(t)`` is the identity with first row
    ``(fixed*moving, 1 - fixed, 0, ...)``; ``rho(s_i)`` is the identity with
    row i+1 equal to ``(moving, -moving, 1)`` in columns i, i+1, i+2.
    """
    coloring = coloring or MixedColoring.default()
    ring = coloring.ring
    fixed, moving = ring.gen(coloring.fixed), ring.gen(coloring.moving)
    if letter.kind is GeneratorKind.SIGMA and letter.index >= n:
        raise IndexOutOfRangeError(f"{letter.name} is not a generator of B_(1,{n})")

    if letter.kind is GeneratorKind.T:
        rows: List[List[object]] = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[0][0] = fixed * moving
        if n >= 2:
            rows[0][1] = 1 - fixed
        mat = RingMatrix.from_rows(ring, rows)
    else:
        mat = reduced_burau_generator(letter.index + 1, moving, n + 1)

    return mat if letter.exponent == 1 else mat.invert_unimodular()


def rho_word(w: MixedBraidWord, coloring: Optional[MixedColoring] = None) -> RingMatrix:
    """Product of ``rho`` over the letters of ``w`` in reading order."""
    coloring = coloring or MixedColoring.default()
    product = RingMatrix.identity(coloring.ring, w.n)
    for letter in w.letters:
        product = product @ rho_generator(letter, w.n, coloring)
    return product


class RelationCheck(NamedTuple):
    relation: BraidRelation
    holds: bool


def rho_relations_hold(n: int, coloring: Optional[MixedColoring] = None) -> List[RelationCheck]:
    """Evaluate ``rho`` on both sides of every defining relation of B_(1,n)."""
    return [
        RelationCheck(rel, rho_word(rel.lhs, coloring) == rho_word(rel.rhs, coloring))
        for rel in relation_pairs(n)
    ]
