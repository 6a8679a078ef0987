"""
Mixed and classical braid words.

A mixed braid word lives in B_{1,n}: a fixed first strand that closes
trivially, plus n moving strands. It is generated by ``t`` (the first moving
strand looping around the fixed strand) and ``s1 .. s(n-1)``. Letters are
read first-to-last, which is bottom-to-top in the braid picture.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

import networkx as nx

from lens_alexander.errors.exceptions import IndexOutOfRangeError, SizeMismatchError


class GeneratorKind(Enum):
    """Generator families of the mixed braid group."""
    T = "t"
    SIGMA = "s"


@dataclass(frozen=True)
class BraidLetter:
    """A generator or its inverse; ``index`` is 0 for ``t``."""

    kind: GeneratorKind
    index: int
    exponent: int

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError(f"Letter exponent must be ±1, got {self.exponent}")
        if self.kind is GeneratorKind.T and self.index != 0:
            raise ValueError("The generator t carries no index")
        if self.kind is GeneratorKind.SIGMA and self.index < 1:
            raise IndexOutOfRangeError(f"Generator index must be at least 1, got {self.index}")

    @classmethod
    def t(cls, exponent: int = 1) -> "BraidLetter":
        return cls(GeneratorKind.T, 0, exponent)

    @classmethod
    def sigma(cls, index: int, exponent: int = 1) -> "BraidLetter":
        return cls(GeneratorKind.SIGMA, index, exponent)

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.kind, self.index, -self.exponent)

    @property
    def name(self) -> str:
        return "t" if self.kind is GeneratorKind.T else f"s{self.index}"

    def __str__(self) -> str:
        return self.name if self.exponent == 1 else f"{self.name}^-1"


def _compress(items: Sequence[Tuple[str, int]]) -> str:
    """Render ``[(name, ±1), ...]`` with runs collapsed, e.g. ``t s1^3``."""
    tokens: List[str] = []
    run_name, run_exp = None, 0
    for name, e in list(items) + [(None, 0)]:
        if name == run_name and (e > 0) == (run_exp > 0):
            run_exp += e
            continue
        if run_name is not None:
            tokens.append(run_name if run_exp == 1 else f"{run_name}^{run_exp}")
        run_name, run_exp = name, e
    return " ".join(tokens)


def _free_reduce(letters: Sequence, inverse) -> List:
    stack: List = []
    for letter in letters:
        if stack and stack[-1] == inverse(letter):
            stack.pop()
        else:
            stack.append(letter)
    return stack


class StrandPermutation:
    """
    Permutation of strand positions ``1..size``.

    ``perm(j)`` is the top position reached by the strand starting at bottom
    position ``j``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(images)}: {images}")
        self.images: Tuple[int, ...] = images

    @classmethod
    def identity(cls, size: int) -> "StrandPermutation":
        return cls(range(1, size + 1))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def then(self, other: "StrandPermutation") -> "StrandPermutation":
        """Apply ``self`` first, then ``other``."""
        if self.size != other.size:
            raise SizeMismatchError("Permutations act on different strand counts")
        return StrandPermutation(other(self(j)) for j in range(1, self.size + 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycles ordered by smallest element, each starting at its smallest element."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.size + 1))
        graph.add_edges_from((j, self(j)) for j in range(1, self.size + 1))
        result = []
        for nodes in sorted(nx.weakly_connected_components(graph), key=min):
            start = min(nodes)
            cycle = [start]
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                nxt = self(nxt)
            result.append(tuple(cycle))
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StrandPermutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"StrandPermutation({list(self.images)})"


@dataclass(frozen=True)
class ComponentPartition:
    """Closure components as cycles of the strand permutation."""

    cycles: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, perm: StrandPermutation) -> "ComponentPartition":
        return cls(tuple(perm.cycles()))

    @property
    def nu(self) -> int:
        return len(self.cycles)

    def component_of(self, j: int) -> int:
        """0-based index of the cycle containing strand position ``j``."""
        for idx, cycle in enumerate(self.cycles):
            if j in cycle:
                return idx
        raise IndexOutOfRangeError(f"Strand {j} is not in the partition")

    def labels(self) -> Tuple[int, ...]:
        """``labels()[j-1]`` is the component of position ``j``."""
        size = sum(len(c) for c in self.cycles)
        return tuple(self.component_of(j) for j in range(1, size + 1))


@dataclass(frozen=True)
class PlainBraidWord:
    """
    Word in the classical braid group B_m.

    Attributes:
        m: Number of strands
        letters: ``(index, exponent)`` pairs with ``1 <= index < m``, exponent ±1
    """

    m: int
    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise SizeMismatchError(f"A braid needs at least one strand, got {self.m}")
        object.__setattr__(self, "letters", tuple((int(i), int(e)) for i, e in self.letters))
        for i, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"Letter exponent must be ±1, got {e}")
            if not 1 <= i < self.m:
                raise IndexOutOfRangeError(f"s{i} is not a generator of B_{self.m}")

    @classmethod
    def from_exponents(cls, m: int, runs: Sequence[Tuple[int, int]]) -> "PlainBraidWord":
        """Expand ``[(i, k), ...]`` into ``s_i^k`` runs."""
        letters: List[Tuple[int, int]] = []
        for i, k in runs:
            letters.extend([(i, 1 if k > 0 else -1)] * abs(k))
        return cls(m, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.letters)

    def __mul__(self, other: "PlainBraidWord") -> "PlainBraidWord":
        if self.m != other.m:
            raise SizeMismatchError(f"Cannot concatenate braids on {self.m} and {other.m} strands")
        return PlainBraidWord(self.m, self.letters + other.letters)

    def inverse(self) -> "PlainBraidWord":
        return PlainBraidWord(self.m, tuple((i, -e) for i, e in reversed(self.letters)))

    def free_reduce(self) -> "PlainBraidWord":
        return PlainBraidWord(self.m, tuple(_free_reduce(self.letters, lambda l: (l[0], -l[1]))))

    def permutation(self) -> StrandPermutation:
        pos = list(range(1, self.m + 1))
        for i, _ in self.letters:
            for j, p in enumerate(pos):
                if p == i:
                    pos[j] = i + 1
                elif p == i + 1:
                    pos[j] = i
        return StrandPermutation(pos)

    def component_partition(self) -> ComponentPartition:
        return ComponentPartition.of(self.permutation())

    def linking_numbers(self) -> Dict[Tuple[int, int], int]:
        """
        Pairwise linking numbers of the closure's components.

        Returns:
            ``{(c1, c2): lk}`` for every pair of 0-based component indices ``c1 < c2``
        """
        partition = self.component_partition()
        comp = partition.labels()
        counts: Dict[Tuple[int, int], int] = {
            (a, b): 0 for a in range(partition.nu) for b in range(a + 1, partition.nu)
        }
        strand_at = list(range(1, self.m + 1))
        for i, e in self.letters:
            c1, c2 = comp[strand_at[i - 1] - 1], comp[strand_at[i] - 1]
            if c1 != c2:
                counts[(min(c1, c2), max(c1, c2))] += e
            strand_at[i - 1], strand_at[i] = strand_at[i], strand_at[i - 1]
        return {pair: total // 2 for pair, total in counts.items()}

    def __str__(self) -> str:
        return _compress([(f"s{i}", e) for i, e in self.letters])


@dataclass(frozen=True)
class MixedBraidWord:
    """
    Word in the mixed braid group B_{1,n}.

    Attributes:
        n: Number of moving strands
        letters: Letters read first-to-last
    """

    n: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise SizeMismatchError(f"B_(1,n) needs n >= 1, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.kind is GeneratorKind.SIGMA and letter.index >= self.n:
                raise IndexOutOfRangeError(f"{letter.name} is not a generator of B_(1,{self.n})")

    @classmethod
    def identity(cls, n: int) -> "MixedBraidWord":
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __mul__(self, other: "MixedBraidWord") -> "MixedBraidWord":
        if self.n != other.n:
            raise SizeMismatchError(f"Cannot concatenate words in B_(1,{self.n}) and B_(1,{other.n})")
        return MixedBraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "MixedBraidWord":
        return MixedBraidWord(self.n, tuple(l.inverse() for l in reversed(self.letters)))

    def t_exponent_sum(self) -> int:
        """The homology class of the closure in the solid torus."""
        return sum(l.exponent for l in self.letters if l.kind is GeneratorKind.T)

    def permutation(self) -> StrandPermutation:
        """Permutation of the moving strands; ``t`` acts trivially."""
        plain = PlainBraidWord(self.n, tuple(
            (l.index, l.exponent) for l in self.letters if l.kind is GeneratorKind.SIGMA
        ))
        return plain.permutation()

    def component_partition(self) -> ComponentPartition:
        return ComponentPartition.of(self.permutation())

    def embed_in_plain(self) -> PlainBraidWord:
        """
        The classical braid on n+1 strands with the fixed strand first.

        ``t`` becomes ``s1^2`` and ``s_i`` becomes ``s_(i+1)``.
        """
        letters: List[Tuple[int, int]] = []
        for l in self.letters:
            if l.kind is GeneratorKind.T:
                letters.extend([(1, l.exponent), (1, l.exponent)])
            else:
                letters.append((l.index + 1, l.exponent))
        return PlainBraidWord(self.n + 1, tuple(letters))

    def remove_fixed_strand(self) -> PlainBraidWord:
        """The moving part as a classical braid on n strands (``t`` letters vanish)."""
        return PlainBraidWord(self.n, tuple(
            (l.index, l.exponent) for l in self.letters if l.kind is GeneratorKind.SIGMA
        ))

    def conjugate(self, g: "MixedBraidWord") -> "MixedBraidWord":
        """``g * self * g^-1``."""
        return g * self * g.inverse()

    def stabilize(self, sign: int = 1) -> "MixedBraidWord":
        """Append ``s_n^sign`` in B_(1,n+1)."""
        if sign not in (1, -1):
            raise ValueError(f"Stabilization sign must be ±1, got {sign}")
        return MixedBraidWord(self.n + 1, self.letters + (BraidLetter.sigma(self.n, sign),))

    def free_reduce(self) -> "MixedBraidWord":
        return MixedBraidWord(self.n, tuple(_free_reduce(self.letters, BraidLetter.inverse)))

    def __str__(self) -> str:
        return _compress([(l.name, l.exponent) for l in self.letters])


class BraidRelation(NamedTuple):
    """One defining relation of B_(1,n): ``lhs == rhs``."""

    family: str
    lhs: MixedBraidWord
    rhs: MixedBraidWord


def relation_pairs(n: int) -> List[BraidRelation]:
    """Every instance of the defining relations of B_(1,n)."""
    t, s = BraidLetter.t(), BraidLetter.sigma

    def word(*letters: BraidLetter) -> MixedBraidWord:
        return MixedBraidWord(n, letters)

    relations: List[BraidRelation] = []
    for i in range(1, n):
        for j in range(i + 2, n):
            relations.append(BraidRelation("far_commutation", word(s(i), s(j)), word(s(j), s(i))))
    for i in range(1, n - 1):
        relations.append(BraidRelation(
            "braid", word(s(i), s(i + 1), s(i)), word(s(i + 1), s(i), s(i + 1))
        ))
    for i in range(2, n):
        relations.append(BraidRelation("t_commutation", word(t, s(i)), word(s(i), t)))
    if n >= 2:
        relations.append(BraidRelation(
            "mixed", word(t, s(1), t, s(1)), word(s(1), t, s(1), t)
        ))
    return relations
