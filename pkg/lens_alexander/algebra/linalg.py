"""
Square matrices over a Laurent polynomial ring.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, List, Sequence, Tuple, Union

from lens_alexander.algebra.laurent import LaurentPoly, Ring
from lens_alexander.errors.exceptions import NotUnimodularError, SizeMismatchError

Entry = Union[LaurentPoly, int]

# Cofactor expansion is used up to this size, fraction-free elimination above.
COFACTOR_LIMIT = 4


@dataclass(frozen=True)
class RingMatrix:
    """
    Immutable ``size x size`` matrix of ``LaurentPoly`` entries.

    Size 0 is allowed; its determinant is 1.
    """

    ring: Ring
    rows: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        for row in self.rows:
            if len(row) != size:
                raise SizeMismatchError(f"Row of length {len(row)} in a {size}x{size} matrix")
            for entry in row:
                if entry.ring != self.ring:
                    raise SizeMismatchError(f"Entry {entry} is not in {self.ring!r}")

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Entry]]) -> "RingMatrix":
        """Build a matrix, lifting integer entries into ``ring``."""
        return cls(
            ring,
            tuple(
                tuple(ring.constant(e) if isinstance(e, int) else e for e in row)
                for row in rows
            ),
        )

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        if n < 0:
            raise SizeMismatchError(f"Negative matrix size {n}")
        return cls.from_rows(ring, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls.from_rows(ring, [[0] * n for _ in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self.rows[i][j]

    def __iter__(self) -> Iterator[Tuple[LaurentPoly, ...]]:
        return iter(self.rows)

    def _check(self, other: "RingMatrix") -> None:
        if self.size != other.size:
            raise SizeMismatchError(f"Cannot combine {self.size}x{self.size} and {other.size}x{other.size}")
        if self.ring != other.ring:
            raise SizeMismatchError(f"Variable contexts differ: {self.ring!r} vs {other.ring!r}")

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        cols = list(zip(*other.rows))
        zero = self.ring.zero()
        rows = []
        for row in self.rows:
            out = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        return RingMatrix(self.ring, tuple(rows))

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        return RingMatrix(
            self.ring,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        return RingMatrix(
            self.ring,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def scale(self, factor: Entry) -> "RingMatrix":
        return self.map_entries(lambda e: e * factor)

    def map_entries(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "RingMatrix":
        """Apply ``fn`` entrywise; the result ring is taken from the new entries."""
        rows = tuple(tuple(fn(e) for e in row) for row in self.rows)
        ring = rows[0][0].ring if self.size else self.ring
        return RingMatrix(ring, rows)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RingMatrix":
        if len(row_idx) != len(col_idx):
            raise SizeMismatchError("Submatrix must be square")
        return RingMatrix(
            self.ring, tuple(tuple(self.rows[i][j] for j in col_idx) for i in row_idx)
        )

    def minors(self, k: int) -> Iterator[LaurentPoly]:
        """Determinants of every ``k x k`` submatrix."""
        for rows in combinations(range(self.size), k):
            for cols in combinations(range(self.size), k):
                yield self.submatrix(rows, cols).det()

    def det(self) -> LaurentPoly:
        """Exact determinant."""
        if self.size <= COFACTOR_LIMIT:
            return self.det_cofactor()
        return self.det_bareiss()

    def det_cofactor(self) -> LaurentPoly:
        """Laplace expansion along the first row."""
        return _cofactor([list(r) for r in self.rows], self.ring)

    def det_bareiss(self) -> LaurentPoly:
        """Fraction-free elimination; every intermediate division is exact."""
        n = self.size
        if n == 0:
            return self.ring.one()
        m: List[List[LaurentPoly]] = [list(r) for r in self.rows]
        sign = 1
        prev = self.ring.one()
        for k in range(n - 1):
            if m[k][k].is_zero:
                for i in range(k + 1, n):
                    if not m[i][k].is_zero:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return self.ring.zero()
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    elt = pivot * m[i][j] - m[i][k] * m[k][j]
                    m[i][j] = elt.exact_div(prev, context="bareiss")
            prev = pivot
        return m[n - 1][n - 1] * sign

    def invert_unimodular(self) -> "RingMatrix":
        """
        Inverse of a matrix whose determinant is ``±`` a monomial.

        Raises:
            NotUnimodularError: If the determinant is not a unit
        """
        det = self.det()
        if not det.is_unit:
            raise NotUnimodularError(f"Determinant {det} is not a unit")
        n = self.size
        if n == 0:
            return self
        inv_det = det ** -1
        if n == 1:
            return RingMatrix(self.ring, ((inv_det,),))
        rows = []
        for i in range(n):
            out = []
            for j in range(n):
                keep_rows = [r for r in range(n) if r != j]
                keep_cols = [c for c in range(n) if c != i]
                cofactor = self.submatrix(keep_rows, keep_cols).det()
                if (i + j) % 2:
                    cofactor = -cofactor
                out.append(cofactor * inv_det)
            rows.append(tuple(out))
        return RingMatrix(self.ring, tuple(rows))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "]"


def _cofactor(m: List[List[LaurentPoly]], ring: Ring) -> LaurentPoly:
    n = len(m)
    if n == 0:
        return ring.one()
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ring.zero()
    for j, entry in enumerate(m[0]):
        if entry.is_zero:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = entry * _cofactor(sub, ring)
        total = total - term if j % 2 else total + term
    return total
