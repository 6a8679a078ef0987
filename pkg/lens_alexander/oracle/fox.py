"""
Fox free differential calculus on closed-braid presentations.

An independent route to Alexander polynomials: present the closure's link
group through the Artin action, differentiate the relators, abelianize and
take the gcd of the codimension-one minors. Used to cross-check the Burau
pipelines at small sizes.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from lens_alexander.algebra.laurent import LaurentPoly, Monomial, Ring, VarId, gcd
from lens_alexander.algebra.linalg import RingMatrix
from lens_alexander.braids.words import ComponentPartition, MixedBraidWord, PlainBraidWord
from lens_alexander.errors.exceptions import IndexOutOfRangeError
from lens_alexander.utils.logging import get_logger

logger = get_logger(__name__)

Letter = Tuple[int, int]

FIXED_VARIABLE = "s"
MOVING_VARIABLE = "t"


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in generators ``x_1 .. x_m``; letters are ``(index, ±1)``."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        stack: List[Letter] = []
        for g, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"Free letter exponent must be ±1, got {e}")
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        object.__setattr__(self, "letters", tuple(stack))

    @classmethod
    def generator(cls, j: int, sign: int = 1) -> "FreeWord":
        return cls(((j, sign),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def substitute(self, images: Sequence["FreeWord"]) -> "FreeWord":
        """Replace each ``x_j`` by ``images[j-1]``."""
        letters: List[Letter] = []
        for g, e in self.letters:
            image = images[g - 1]
            letters.extend(image.letters if e == 1 else image.inverse().letters)
        return FreeWord(tuple(letters))

    def exponent_sums(self, m: int) -> Tuple[int, ...]:
        sums = [0] * m
        for g, e in self.letters:
            sums[g - 1] += e
        return tuple(sums)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)


@dataclass(frozen=True)
class GroupRingElement:
    """Integer combination of free words."""

    terms: Tuple[Tuple[FreeWord, int], ...] = ()

    @classmethod
    def from_counter(cls, counts: Dict[FreeWord, int]) -> "GroupRingElement":
        return cls(tuple(sorted(
            ((w, c) for w, c in counts.items() if c), key=lambda item: item[0].letters
        )))


@dataclass(frozen=True)
class GroupPresentation:
    """
    Presentation with ``m`` generators and one relator per generator.

    ``component_of[j-1]`` is the closure component carrying generator ``x_j``.
    """

    m: int
    relators: Tuple[FreeWord, ...]
    component_of: Tuple[int, ...]

    def __post_init__(self):
        if len(self.component_of) != self.m:
            raise IndexOutOfRangeError(f"{len(self.component_of)} component labels for {self.m} generators")
        for r in self.relators:
            for g, _ in r.letters:
                if not 1 <= g <= self.m:
                    raise IndexOutOfRangeError(f"Relator uses x{g} outside x1..x{self.m}")


def _letter_action(i: int, e: int, m: int) -> List[FreeWord]:
    """Images of ``x_1 .. x_m`` under a single ``s_i^e``."""
    images = [FreeWord.generator(j) for j in range(1, m + 1)]
    xi, xk = FreeWord.generator(i), FreeWord.generator(i + 1)
    if e == 1:
        images[i - 1] = xi * xk * xi.inverse()
        images[i] = xi
    else:
        images[i - 1] = xk
        images[i] = xk.inverse() * xi * xk
    return images


def artin_action(w: PlainBraidWord) -> List[FreeWord]:
    """
    Images of the free generators under the automorphism of ``w``.

    ``s_i`` sends ``x_i -> x_i x_(i+1) x_i^-1`` and ``x_(i+1) -> x_i``; the
    action of a word is the composite of its letters' actions in reading order.
    """
    images = [FreeWord.generator(j) for j in range(1, w.m + 1)]
    for i, e in w.letters:
        images = [word.substitute(images) for word in _letter_action(i, e, w.m)]
    return images


def closure_presentation(
    w: PlainBraidWord, components: Optional[ComponentPartition] = None
) -> GroupPresentation:
    """
    Link group of the closure of ``w`` with relators ``w(x_j) x_j^-1``.

    One relator is a consequence of the others; it is kept.
    """
    partition = components or w.component_partition()
    images = artin_action(w)
    relators = tuple(
        image * FreeWord.generator(j, -1) for j, image in enumerate(images, start=1)
    )
    return GroupPresentation(w.m, relators, partition.labels())


def fox_derivative(u: FreeWord, j: int) -> GroupRingElement:
    """
    The free derivative ``d u / d x_j``.

    ``d(uv) = du + u dv``, ``d x_j = 1`` and ``d x_j^-1 = -x_j^-1``.
    """
    counts: Counter = Counter()
    prefix: List[Letter] = []
    for g, e in u.letters:
        if g == j:
            if e == 1:
                counts[FreeWord(tuple(prefix))] += 1
            else:
                counts[FreeWord(tuple(prefix) + ((g, -1),))] -= 1
        prefix.append((g, e))
    return GroupRingElement.from_counter(counts)


def two_variable_ring() -> Ring:
    return Ring((FIXED_VARIABLE, MOVING_VARIABLE))


def _default_component_vars(pres: GroupPresentation, ring: Ring) -> List[VarId]:
    """Component 0 (the fixed strand) goes to ``s``, every other component to ``t``."""
    nu = max(pres.component_of) + 1
    return [ring.var(FIXED_VARIABLE)] + [ring.var(MOVING_VARIABLE)] * (nu - 1)


def eta_abelianize(
    elem: GroupRingElement,
    pres: GroupPresentation,
    ring: Optional[Ring] = None,
    component_vars: Optional[Sequence[VarId]] = None,
) -> LaurentPoly:
    """
    Send each ``x_j`` to the variable of its component and extend linearly.

    By default component 0 maps to ``s`` and all others to ``t``.
    """
    ring = ring or two_variable_ring()
    component_vars = component_vars or _default_component_vars(pres, ring)
    var_index = [ring.index_of(component_vars[c]) for c in pres.component_of]
    terms: Dict[Monomial, int] = {}
    for word, coeff in elem.terms:
        exps = [0] * len(ring)
        for g, e in word.letters:
            exps[var_index[g - 1]] += e
        mono = Monomial(tuple(exps))
        terms[mono] = terms.get(mono, 0) + coeff
    return LaurentPoly(ring, terms)


def alexander_fox_matrix(
    pres: GroupPresentation,
    ring: Optional[Ring] = None,
    component_vars: Optional[Sequence[VarId]] = None,
) -> RingMatrix:
    """Abelianized Fox Jacobian: rows are relators, columns generators."""
    ring = ring or two_variable_ring()
    component_vars = component_vars or _default_component_vars(pres, ring)
    var_index = [ring.index_of(component_vars[c]) for c in pres.component_of]
    rows = [_abelianized_row(r, pres.m, var_index, ring) for r in pres.relators]
    return RingMatrix(ring, tuple(rows))


def _abelianized_row(
    relator: FreeWord, m: int, var_index: Sequence[int], ring: Ring
) -> Tuple[LaurentPoly, ...]:
    """
    ``eta(d r / d x_j)`` for every j in one pass.

    Equivalent to ``eta_abelianize(fox_derivative(r, j))``; prefixes are
    tracked by their abelianized exponent vector only.
    """
    entries: List[Dict[Monomial, int]] = [{} for _ in range(m)]
    exps = [0] * len(ring)
    for g, e in relator.letters:
        k = var_index[g - 1]
        if e == 1:
            mono, coeff = Monomial(tuple(exps)), 1
        else:
            exps[k] -= 1
            mono, coeff = Monomial(tuple(exps)), -1
        bucket = entries[g - 1]
        bucket[mono] = bucket.get(mono, 0) + coeff
        if e == 1:
            exps[k] += 1
    return tuple(LaurentPoly(ring, bucket) for bucket in entries)


def elementary_ideal_gcd(matrix: RingMatrix) -> LaurentPoly:
    """gcd of every ``(size-1) x (size-1)`` minor, integer content included."""
    return gcd(matrix.minors(matrix.size - 1))


def oracle_two_variable(w: MixedBraidWord) -> LaurentPoly:
    """
    Two-variable polynomial of ``I u closure(w)`` by Fox calculus.

    Generators on the fixed strand map to ``s``, all others to ``t``.
    """
    plain = w.embed_in_plain()
    pres = closure_presentation(plain)
    result = elementary_ideal_gcd(alexander_fox_matrix(pres))
    logger.debug("Fox oracle", word=str(w), result=str(result))
    return result


def oracle_multivariable(w: PlainBraidWord, ring: Ring) -> LaurentPoly:
    """
    Fox-calculus polynomial of a classical closed braid.

    Args:
        w: Classical braid
        ring: One variable per closure component, in component order
    """
    pres = closure_presentation(w)
    nu = max(pres.component_of) + 1
    return elementary_ideal_gcd(alexander_fox_matrix(pres, ring, ring.variables[:nu]))
