"""
Sparse multivariate Laurent polynomials with exact integer coefficients.

A ``Ring`` fixes an ordered tuple of variable names; every ``LaurentPoly``
lives in one ring and stores a sparse map from dense exponent vectors
(``Monomial``) to nonzero integers. Exact division and gcd are delegated to
sympy after shifting out the monomial content, so both operate on honest
polynomials over ZZ.
"""

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy import ZZ, Poly
from sympy.polys.polyerrors import ExactQuotientFailed

from lens_alexander.errors.exceptions import NotDivisibleError, SizeMismatchError


@dataclass(frozen=True)
class VarId:
    """A variable of a ring, identified by its position and name."""

    index: int
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Monomial:
    """Dense exponent vector, one integer per ring variable."""

    exponents: Tuple[int, ...]

    @classmethod
    def one(cls, size: int) -> "Monomial":
        return cls((0,) * size)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def inverse(self) -> "Monomial":
        return Monomial(tuple(-a for a in self.exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def as_dict(self, ring: "Ring") -> Dict[str, int]:
        """Sparse ``{name: exponent}`` view with zero exponents omitted."""
        return {ring.names[i]: e for i, e in enumerate(self.exponents) if e}


VarLike = Union[VarId, str]
PolyLike = Union["LaurentPoly", int]


class Ring:
    """
    Variable context for Laurent polynomials.

    Two rings are equal when their variable names agree in order.
    """

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("A ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate variable names: {names}")
        self.names: Tuple[str, ...] = names
        self.variables: Tuple[VarId, ...] = tuple(VarId(i, n) for i, n in enumerate(names))
        self._index = {n: i for i, n in enumerate(names)}
        self._symbols = tuple(sympy.symbols(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[VarId]:
        return iter(self.variables)

    def __contains__(self, name: object) -> bool:
        if isinstance(name, VarId):
            name = name.name
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Ring({', '.join(repr(n) for n in self.names)})"

    def var(self, name: str) -> VarId:
        """Look up a variable by name."""
        try:
            return self.variables[self._index[name]]
        except KeyError:
            raise ValueError(f"Variable '{name}' is not in {self!r}") from None

    def index_of(self, v: VarLike) -> int:
        if isinstance(v, VarId):
            if self._index.get(v.name) != v.index:
                raise ValueError(f"Variable {v} does not belong to {self!r}")
            return v.index
        return self.var(v).index

    def extend(self, *names: str) -> "Ring":
        """Ring with ``names`` appended (existing names are kept once)."""
        return Ring(self.names + tuple(n for n in names if n not in self._index))

    def without(self, *names: str) -> "Ring":
        return Ring(n for n in self.names if n not in names)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.constant(1)

    def constant(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self, {Monomial.one(len(self)): c})

    def gen(self, v: VarLike, exponent: int = 1) -> "LaurentPoly":
        """The polynomial ``v^exponent``."""
        exps = [0] * len(self)
        exps[self.index_of(v)] = exponent
        return LaurentPoly(self, {Monomial(tuple(exps)): 1})

    def monomial(self, exponents: Mapping[str, int], coeff: int = 1) -> "LaurentPoly":
        exps = [0] * len(self)
        for name, e in exponents.items():
            exps[self.index_of(name)] += e
        return LaurentPoly(self, {Monomial(tuple(exps)): coeff})

    def to_sympy(self, terms: Mapping[Monomial, int]) -> Poly:
        """Convert terms with nonnegative exponents to a sympy ``Poly`` over ZZ."""
        rep = {m.exponents: c for m, c in terms.items()}
        return Poly.from_dict(rep, *self._symbols, domain=ZZ)

    def from_sympy(self, poly: Poly) -> "LaurentPoly":
        return LaurentPoly(
            self, {Monomial(tuple(m)): int(c) for m, c in poly.terms() if c}
        )


class LaurentPoly:
    """
    Element of ZZ[x_1^{±1}, ..., x_k^{±1}] for the variables of a ``Ring``.

    Instances are immutable and hashable; zero coefficients are never stored.
    Arithmetic accepts plain integers on either side.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, int]):
        self.ring = ring
        self._terms: Dict[Monomial, int] = {m: c for m, c in terms.items() if c}
        self._hash: Optional[int] = None

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_unit(self) -> bool:
        """True for ``±`` a monomial."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def variables_used(self) -> Tuple[str, ...]:
        """Names of variables with a nonzero exponent in some term, in ring order."""
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m.exponents) if e)
        return tuple(self.ring.names[i] for i in sorted(used))

    def _lift(self, other: PolyLike) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise SizeMismatchError(f"Variable contexts differ: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        raise TypeError(f"Cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other: PolyLike) -> "LaurentPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "LaurentPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "LaurentPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return LaurentPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit:
                raise ValueError(f"Negative power of non-unit {self}")
            (m, c), = self._terms.items()
            return LaurentPoly(self.ring, {m.inverse(): c}) ** (-k)
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_plain()!r}, {self.ring!r})"

    def __str__(self) -> str:
        return self.to_plain()

    # -- substitution and renaming -------------------------------------

    def substitute(self, v: VarLike, target: VarLike, k: int) -> "LaurentPoly":
        """Replace ``v`` by ``target^k`` (``k = 0`` sends ``v`` to 1)."""
        return self.substitute_many({v: (target, k)})

    def substitute_many(self, mapping: Mapping[VarLike, Tuple[VarLike, int]]) -> "LaurentPoly":
        """
        Simultaneously replace each key ``v`` by ``target^k``.

        Args:
            mapping: ``{v: (target, k)}``; a target may itself be a key

        Returns:
            The substituted polynomial in the same ring
        """
        plan = [
            (self.ring.index_of(v), self.ring.index_of(target), k)
            for v, (target, k) in mapping.items()
        ]
        replaced = {i for i, _, _ in plan}
        terms: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            exps = [0 if i in replaced else e for i, e in enumerate(m.exponents)]
            for i, j, k in plan:
                exps[j] += k * m.exponents[i]
            mono = Monomial(tuple(exps))
            terms[mono] = terms.get(mono, 0) + c
        return LaurentPoly(self.ring, terms)

    def rename(self, mapping: Mapping[str, str], ring: Ring) -> "LaurentPoly":
        """
        Move into ``ring``, sending variable ``x`` to ``mapping.get(x, x)``.

        Raises:
            SizeMismatchError: If a used variable has no image in ``ring``
        """
        size = len(ring)
        targets = {}
        for name in self.variables_used():
            image = mapping.get(name, name)
            if image not in ring:
                raise SizeMismatchError(f"Variable '{image}' is missing from {ring!r}")
            targets[self.ring.index_of(name)] = ring.index_of(image)
        terms: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            exps = [0] * size
            for i, e in enumerate(m.exponents):
                if e:
                    exps[targets[i]] += e
            mono = Monomial(tuple(exps))
            terms[mono] = terms.get(mono, 0) + c
        return LaurentPoly(ring, terms)

    def coerce(self, ring: Ring) -> "LaurentPoly":
        """Move into ``ring`` keeping variable names."""
        if ring == self.ring:
            return self
        return self.rename({}, ring)

    # -- exact division, units -----------------------------------------

    def _split_content(self) -> Tuple[Dict[Monomial, int], Monomial]:
        """Return ``(terms, shift)`` with ``self = shift * terms`` and all minima zero."""
        mins = tuple(min(col) for col in zip(*(m.exponents for m in self._terms)))
        shift = Monomial(mins)
        return {m / shift: c for m, c in self._terms.items()}, shift

    def exact_div(self, divisor: PolyLike, context: Optional[str] = None) -> "LaurentPoly":
        """
        Divide exactly by ``divisor``.

        Args:
            divisor: Nonzero polynomial or integer
            context: Label attached to a failure report

        Returns:
            The unique Laurent polynomial ``r`` with ``self == divisor * r``

        Raises:
            ZeroDivisionError: If ``divisor`` is zero
            NotDivisibleError: If the division leaves a remainder
        """
        d = self._lift(divisor)
        if d.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero:
            return self
        if len(d._terms) == 1:
            (dm, dc), = d._terms.items()
            terms = {}
            for m, c in self._terms.items():
                q, r = divmod(c, dc)
                if r:
                    raise NotDivisibleError(self, d, context)
                terms[m / dm] = q
            return LaurentPoly(self.ring, terms)

        num, num_shift = self._split_content()
        den, den_shift = d._split_content()
        try:
            quotient = self.ring.to_sympy(num).exquo(self.ring.to_sympy(den), auto=False)
        except ExactQuotientFailed:
            raise NotDivisibleError(self, d, context) from None
        result = self.ring.from_sympy(quotient)
        return LaurentPoly(
            self.ring, {m * num_shift / den_shift: c for m, c in result._terms.items()}
        )

    def normalize_units(self) -> Tuple["LaurentPoly", Monomial, int]:
        """
        Choose the canonical associate among ``±monomial * self``.

        The canonical form has every variable's minimum exponent equal to 0 and
        a positive coefficient on its lexicographically greatest monomial.

        Returns:
            ``(canonical, monomial, sign)`` with ``canonical == sign * monomial * self``
        """
        if self.is_zero:
            return self, Monomial.one(len(self.ring)), 1
        terms, shift = self._split_content()
        lead = max(terms, key=lambda m: m.exponents)
        sign = 1 if terms[lead] > 0 else -1
        canonical = LaurentPoly(self.ring, {m: sign * c for m, c in terms.items()})
        return canonical, shift.inverse(), sign

    def canonical(self) -> "LaurentPoly":
        return self.normalize_units()[0]

    def equals_up_to_units(self, other: "LaurentPoly") -> bool:
        """True when ``other == ±monomial * self`` in the same ring."""
        if self.ring != other.ring:
            return False
        return self.canonical() == other.canonical()

    # -- rendering and the JSON term codec -----------------------------

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """Terms by decreasing total degree, ties broken by decreasing exponent vector."""
        return sorted(
            self._terms.items(),
            key=lambda item: (item[0].degree, item[0].exponents),
            reverse=True,
        )

    def _format(self, latex: bool) -> str:
        if self.is_zero:
            return "0"
        parts: List[str] = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in m.as_dict(self.ring).items():
                if e == 1:
                    factors.append(name)
                elif latex:
                    factors.append(f"{name}^{{{e}}}")
                else:
                    factors.append(f"{name}^{e}")
            magnitude = abs(c)
            if factors and magnitude == 1:
                body = (" " if latex else "*").join(factors)
            else:
                body = (" " if latex else "*").join([str(magnitude)] + factors)
            if idx == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(parts)

    def to_plain(self) -> str:
        """Text such as ``t^6 - t^3 + 1`` or ``-a*b^2 + 2``."""
        return self._format(latex=False)

    def to_latex(self) -> str:
        return self._format(latex=True)

    def to_terms(self) -> List[List[object]]:
        """JSON-ready ``[[coeff, {var: exp}], ...]`` in rendering order."""
        return [[c, m.as_dict(self.ring)] for m, c in self.sorted_terms()]

    @classmethod
    def from_terms(cls, ring: Ring, terms: Sequence[Sequence[object]]) -> "LaurentPoly":
        """Inverse of ``to_terms``."""
        result = ring.zero()
        for coeff, exps in terms:
            if not isinstance(coeff, int) or not isinstance(exps, Mapping):
                raise ValueError(f"Malformed term: {[coeff, exps]!r}")
            result = result + ring.monomial(exps, coeff)
        return result


def gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """
    Greatest common divisor up to units, integer content included.

    Zero inputs are ignored; the gcd of only zeros is zero. Evaluation stops
    early once the running gcd is a unit.

    Returns:
        The canonical associate of the gcd
    """
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty family")
    ring = polys[0].ring
    running: Optional[Poly] = None
    for p in polys:
        if p.ring != ring:
            raise SizeMismatchError(f"Variable contexts differ: {ring!r} vs {p.ring!r}")
        if p.is_zero:
            continue
        terms, _ = p._split_content()
        current = ring.to_sympy(terms)
        running = current if running is None else running.gcd(current)
        if running.is_ground and abs(int(running.LC())) == 1:
            return ring.one()
    if running is None:
        return ring.zero()
    return ring.from_sympy(running).canonical()
