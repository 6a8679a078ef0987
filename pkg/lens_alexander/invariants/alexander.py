"""
Alexander polynomial pipelines.

Classical links are handled through the coloured reduced Burau matrix of a
braid; links in the solid torus and in lens spaces through ``rho`` of a mixed
braid word followed by the surgery substitution.
"""

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Optional, Tuple

from lens_alexander.algebra.laurent import LaurentPoly, Ring, VarId
from lens_alexander.algebra.linalg import RingMatrix
from lens_alexander.braids.words import MixedBraidWord, PlainBraidWord
from lens_alexander.errors.exceptions import (
    BusinessError,
    InvalidSurgeryError,
    NotAKnotError,
)
from lens_alexander.representations.burau import (
    ColorAssignment,
    MixedColoring,
    colored_burau_word,
    rho_word,
)
from lens_alexander.utils.logging import get_logger

logger = get_logger(__name__)

LENS_VARIABLE = "t"


@dataclass(frozen=True)
class SurgeryParams:
    """
    Surgery data for L(p,q) together with the homology class of the closure.

    ``p_prime = p / g`` and ``beta_prime = beta_class / g`` with
    ``g = gcd(p, |beta_class|)``; both are unused when ``beta_class == 0``.
    """

    p: int
    q: int
    beta_class: int
    p_prime: int
    beta_prime: int

    @classmethod
    def create(cls, p: int, q: int, beta_class: int) -> "SurgeryParams":
        """
        Validate ``(p, q)`` and derive ``p'`` and ``[beta]'``.

        Raises:
            InvalidSurgeryError: Unless ``0 < q < p`` with ``gcd(p, q) == 1``,
                or ``(p, q) == (1, 0)`` for the 3-sphere
        """
        if p < 1:
            raise InvalidSurgeryError(f"p must be positive, got {p}")
        if p == 1:
            if q != 0:
                raise InvalidSurgeryError(f"p = 1 requires q = 0, got q = {q}")
        elif not 0 < q < p:
            raise InvalidSurgeryError(f"q must satisfy 0 < q < p, got p = {p}, q = {q}")
        if gcd(p, q) != 1:
            raise InvalidSurgeryError(f"gcd(p, q) must be 1, got gcd({p}, {q}) = {gcd(p, q)}")
        g = gcd(p, abs(beta_class))
        return cls(p, q, beta_class, p // g, beta_class // g)


@dataclass(frozen=True)
class AlexResult:
    """Canonical lens-space polynomial plus diagnostics."""

    polynomial: LaurentPoly
    variable: VarId
    nu: int
    beta_class: int
    p_prime: int
    beta_prime: int
    determinant: LaurentPoly
    route: str = "direct"


def _minimal(poly: LaurentPoly, names) -> LaurentPoly:
    return poly.coerce(Ring(names))


def alex_classical_knot(w: PlainBraidWord) -> LaurentPoly:
    """
    Alexander polynomial of a knot given as a closed braid.

    ``(1 - t) det(I - B(t)) / (1 - t^m)`` for the reduced Burau matrix ``B``.

    Raises:
        NotAKnotError: If the closure has more than one component
        NotDivisibleError: If the quotient is not a Laurent polynomial
    """
    nu = w.component_partition().nu
    if nu != 1:
        raise NotAKnotError(f"Closure of '{w}' has {nu} components")
    ring = Ring((LENS_VARIABLE,))
    t = ring.gen(LENS_VARIABLE)
    burau, _ = colored_burau_word(w, ColorAssignment.uniform(ring, ring.var(LENS_VARIABLE), w.m))
    det = (RingMatrix.identity(ring, w.m - 1) - burau).det()
    return ((1 - t) * det).exact_div(1 - t ** w.m, context=f"classical knot '{w}'").canonical()


def multivariable_ring(nu: int) -> Ring:
    """``t`` for a knot, ``t_1 .. t_nu`` otherwise."""
    if nu == 1:
        return Ring((LENS_VARIABLE,))
    return Ring(f"t_{k}" for k in range(1, nu + 1))


def _component_colors(w: PlainBraidWord, ring: Ring) -> ColorAssignment:
    partition = w.component_partition()
    return ColorAssignment.by_component(ring, partition, ring.variables[: partition.nu])


def alex_classical_multivariable(w: PlainBraidWord) -> LaurentPoly:
    """
    Multivariable Alexander polynomial of a closed braid, one variable per component.

    ``det(I - B) = Delta (1 - t_1 ... t_m)`` for two or more components and
    ``Delta (1 - t^m) / (1 - t)`` for a knot, where the product runs over
    strands coloured by their components.
    """
    nu = w.component_partition().nu
    ring = multivariable_ring(nu)
    colors = _component_colors(w, ring)
    burau, _ = colored_burau_word(w, colors)
    det = (RingMatrix.identity(ring, w.m - 1) - burau).det()
    strands = ring.one()
    for v in colors.labels:
        strands = strands * ring.gen(v)
    context = f"multivariable '{w}'"
    if nu == 1:
        delta = ((1 - ring.gen(LENS_VARIABLE)) * det).exact_div(1 - strands, context=context)
    else:
        delta = det.exact_div(1 - strands, context=context)
    return delta.canonical()


def alex_with_axis(w: PlainBraidWord) -> LaurentPoly:
    """
    ``det(I - x B)`` with component colours: the invariant of the closure
    together with its braid axis, coloured ``x``. No division is involved.
    """
    nu = w.component_partition().nu
    ring = multivariable_ring(nu).extend("x")
    colors = _component_colors(w, ring)
    burau, _ = colored_burau_word(w, colors)
    return (RingMatrix.identity(ring, w.m - 1) - burau.scale(ring.gen("x"))).det().canonical()


def solid_torus_determinant(w: MixedBraidWord, coloring: Optional[MixedColoring] = None) -> LaurentPoly:
    """``det(I - rho(w))`` in the coloring's ring."""
    coloring = coloring or MixedColoring.default()
    return (RingMatrix.identity(coloring.ring, w.n) - rho_word(w, coloring)).det()


def alex_solid_torus(w: MixedBraidWord, coloring: Optional[MixedColoring] = None) -> LaurentPoly:
    """
    Two-variable Alexander polynomial of the mixed link ``I u closure(w)``.

    ``det(I - rho(w)) / (1 - fixed * moving^n)``, unit-normalized.

    Raises:
        NotDivisibleError: If the quotient is not a Laurent polynomial
    """
    coloring = coloring or MixedColoring.default()
    ring = coloring.ring
    det = solid_torus_determinant(w, coloring)
    denominator = 1 - ring.gen(coloring.fixed) * ring.gen(coloring.moving, w.n)
    return det.exact_div(denominator, context=f"solid torus '{w}'").canonical()


def alex_from_surgery(
    delta2: LaurentPoly,
    params: SurgeryParams,
    fixed: VarId,
    moving: VarId,
) -> LaurentPoly:
    """
    Lens-space polynomial from the two-variable mixed-link polynomial.

    With ``[beta] != 0``: substitute ``fixed -> t^(q [beta]')`` and
    ``moving -> t^(p')``, multiply by ``t - 1`` and divide by
    ``t^[beta]' - 1``. With ``[beta] == 0``: substitute ``fixed -> t^q`` and
    ``moving -> t``.

    Args:
        delta2: Polynomial in a ring containing ``fixed`` and ``moving``
        params: Surgery data
        fixed: Colour of the surgery curve
        moving: Colour of the link in the solid torus

    Returns:
        Canonical polynomial in the single variable ``t``
    """
    ring = delta2.ring.extend(LENS_VARIABLE)
    d = delta2.coerce(ring)
    t = ring.var(LENS_VARIABLE)
    fixed, moving = ring.var(fixed.name), ring.var(moving.name)
    if params.beta_class != 0:
        d = d.substitute_many({
            fixed: (t, params.q * params.beta_prime),
            moving: (t, params.p_prime),
        })
        numerator = (ring.gen(t) - 1) * d
        result = numerator.exact_div(
            ring.gen(t, params.beta_prime) - 1, context="surgery formula"
        )
    else:
        result = d.substitute_many({fixed: (t, params.q), moving: (t, 1)})
    return _minimal(result.canonical(), (LENS_VARIABLE,))


def _lens_direct(
    w: MixedBraidWord, params: SurgeryParams, coloring: MixedColoring
) -> Optional[Tuple[LaurentPoly, LaurentPoly]]:
    """
    The one-step lens formula on ``det(I - rho(w))``.

    Returns ``(polynomial, substituted determinant)``, or ``None`` when the
    denominator ``1 - t^(n p' + q [beta]')`` vanishes identically.
    """
    ring = coloring.ring.extend(LENS_VARIABLE)
    t = ring.var(LENS_VARIABLE)
    det = solid_torus_determinant(w, coloring).coerce(ring)
    fixed, moving = ring.var(coloring.fixed.name), ring.var(coloring.moving.name)
    context = f"lens L({params.p},{params.q}) '{w}'"
    if params.beta_class != 0:
        det_t = det.substitute_many({
            fixed: (t, params.q * params.beta_prime),
            moving: (t, params.p_prime),
        })
        exponent = w.n * params.p_prime + params.q * params.beta_prime
        if exponent == 0:
            return None
        numerator = (ring.gen(t) - 1) * det_t
        denominator = (ring.gen(t, params.beta_prime) - 1) * (1 - ring.gen(t, exponent))
    else:
        det_t = det.substitute_many({fixed: (t, params.q), moving: (t, 1)})
        numerator = det_t
        denominator = 1 - ring.gen(t, w.n + params.q)
    polynomial = numerator.exact_div(denominator, context=context)
    names = (LENS_VARIABLE,)
    return _minimal(polynomial.canonical(), names), _minimal(det_t, names)


def alex_lens(
    w: MixedBraidWord,
    p: int,
    q: int,
    coloring: Optional[MixedColoring] = None,
    verify: bool = False,
) -> AlexResult:
    """
    Alexander polynomial of the closure of ``w`` in L(p,q).

    Args:
        w: Mixed braid word in B_(1,n)
        p: Lens space order
        q: Lens space twist, coprime to ``p``
        coloring: Colour variables for ``rho``
        verify: Also compute the factored route and compare

    Returns:
        Canonical polynomial in ``t`` with diagnostics

    Raises:
        InvalidSurgeryError: For an invalid ``(p, q)``
        NotDivisibleError: If an exact division fails
        BusinessError: ``route_mismatch`` when ``verify`` finds disagreement
    """
    coloring = coloring or MixedColoring.default()
    params = SurgeryParams.create(p, q, w.t_exponent_sum())
    nu = w.component_partition().nu
    log = logger.bind(word=str(w), n=w.n, p=p, q=q)

    direct = _lens_direct(w, params, coloring)
    if direct is None:
        log.info("Direct lens denominator vanishes, using factored route")
        polynomial = _factored(w, params, coloring)
        return AlexResult(
            polynomial=polynomial,
            variable=polynomial.ring.var(LENS_VARIABLE),
            nu=nu,
            beta_class=params.beta_class,
            p_prime=params.p_prime,
            beta_prime=params.beta_prime,
            determinant=_determinant_in_t(w, params, coloring),
            route="factored",
        )

    polynomial, det_t = direct
    if verify:
        factored = _factored(w, params, coloring)
        if not factored.equals_up_to_units(polynomial):
            log.error("Lens routes disagree", direct=str(polynomial), factored=str(factored))
            raise BusinessError(
                "route_mismatch",
                f"direct and factored lens routes disagree on '{w}'",
                {"direct": str(polynomial), "factored": str(factored)},
            )
        log.debug("Lens routes agree")
    return AlexResult(
        polynomial=polynomial,
        variable=polynomial.ring.var(LENS_VARIABLE),
        nu=nu,
        beta_class=params.beta_class,
        p_prime=params.p_prime,
        beta_prime=params.beta_prime,
        determinant=det_t,
        route="verified" if verify else "direct",
    )


def _factored(w: MixedBraidWord, params: SurgeryParams, coloring: MixedColoring) -> LaurentPoly:
    delta2 = alex_solid_torus(w, coloring)
    return alex_from_surgery(delta2, params, coloring.fixed, coloring.moving)


def _determinant_in_t(w: MixedBraidWord, params: SurgeryParams, coloring: MixedColoring) -> LaurentPoly:
    ring = coloring.ring.extend(LENS_VARIABLE)
    t = ring.var(LENS_VARIABLE)
    det = solid_torus_determinant(w, coloring).coerce(ring)
    det_t = det.substitute_many({
        ring.var(coloring.fixed.name): (t, params.q * params.beta_prime),
        ring.var(coloring.moving.name): (t, params.p_prime),
    })
    return _minimal(det_t, (LENS_VARIABLE,))


def verify_lens(w: MixedBraidWord, p: int, q: int, coloring: Optional[MixedColoring] = None) -> AlexResult:
    """``alex_lens`` with both routes computed and compared."""
    return alex_lens(w, p, q, coloring=coloring, verify=True)


def torres_reduce(
    delta: LaurentPoly,
    drop: VarId,
    linking: Mapping[VarId, int],
) -> LaurentPoly:
    """
    Remove one component from a multivariable Alexander polynomial.

    Args:
        delta: Polynomial with one variable per component
        drop: Variable of the component to remove
        linking: Linking number of each remaining component with the dropped one

    Returns:
        The polynomial of the sublink, in the ring without ``drop``

    Raises:
        BusinessError: ``degenerate_linking`` when every linking number is zero
        NotDivisibleError: If the quotient is not a Laurent polynomial
    """
    ring = delta.ring
    reduced = delta.substitute(drop, drop, 0)
    product = ring.one()
    for v, lk in linking.items():
        product = product * ring.gen(v.name, lk)
    if product == 1:
        raise BusinessError(
            "degenerate_linking",
            "all linking numbers with the removed component vanish",
            {"drop": drop.name},
        )
    denominator = 1 - product
    context = f"torres removal of {drop.name}"
    if len(linking) == 1:
        (v,) = linking
        result = ((1 - ring.gen(v.name)) * reduced).exact_div(denominator, context=context)
    else:
        result = reduced.exact_div(denominator, context=context)
    return result.canonical().coerce(ring.without(drop.name))
