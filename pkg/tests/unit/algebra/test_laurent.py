"""
Tests for Laurent polynomial arithmetic.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lens_alexander.algebra.laurent import LaurentPoly, Monomial, Ring, gcd
from lens_alexander.errors.exceptions import NotDivisibleError, SizeMismatchError
from tests.strategies import laurent_polys, nonzero_laurent_polys

RING_ST = Ring(("s", "t"))


class TestRing:
    """Tests for the Ring variable context."""

    def test_requires_variables(self):
        """Test that an empty ring is rejected."""
        with pytest.raises(ValueError):
            Ring(())

    def test_rejects_duplicates(self):
        """Test that duplicate names are rejected."""
        with pytest.raises(ValueError):
            Ring(("a", "a"))

    def test_equality_by_names(self):
        """Test that rings compare by their ordered names."""
        assert Ring(("a", "b")) == Ring(("a", "b"))
        assert Ring(("a", "b")) != Ring(("b", "a"))

    def test_extend_and_without(self, ring_ab):
        """Test building related rings."""
        assert ring_ab.extend("t", "a").names == ("a", "b", "t")
        assert ring_ab.extend("t").without("a").names == ("b", "t")

    def test_unknown_variable(self, ring_ab):
        """Test that looking up a missing variable raises."""
        with pytest.raises(ValueError):
            ring_ab.var("t")

    def test_foreign_variable(self, ring_ab):
        """Test that a VarId of another ring is rejected."""
        foreign = Ring(("b",)).var("b")
        with pytest.raises(ValueError):
            ring_ab.index_of(foreign)


class TestArithmetic:
    """Tests for ring operations."""

    def test_add_cancels(self, ring_t):
        """Test that cancelled terms disappear."""
        t = ring_t.gen("t")
        assert (t + 1) + (-t) == 1
        assert (t - t).is_zero

    def test_multiply(self, ring_ab):
        """Test a two-variable product."""
        a, b = ring_ab.gen("a"), ring_ab.gen("b")
        product = (1 - a * b ** 2) * (1 - b + b ** 2)
        expected = 1 - b + b ** 2 - a * b ** 2 + a * b ** 3 - a * b ** 4
        assert product == expected

    def test_inverse_monomial(self, ring_t):
        """Test that t^-1 * t is one."""
        assert ring_t.gen("t", -1) * ring_t.gen("t") == 1

    def test_powers(self, ring_t):
        """Test positive and negative powers."""
        t = ring_t.gen("t")
        assert (t + 1) ** 2 == t ** 2 + 2 * t + 1
        assert t ** -2 == ring_t.gen("t", -2)
        assert (-t) ** -1 == -ring_t.gen("t", -1)

    def test_negative_power_of_non_unit(self, ring_t):
        """Test that only units can be inverted."""
        with pytest.raises(ValueError):
            (ring_t.gen("t") + 1) ** -1

    def test_units(self, ring_t):
        """Test unit detection."""
        t = ring_t.gen("t")
        assert (-t).is_unit
        assert not (2 * t).is_unit
        assert not ring_t.zero().is_unit

    def test_rings_must_match(self, ring_t, ring_ab):
        """Test that mixing rings raises."""
        with pytest.raises(SizeMismatchError):
            ring_t.gen("t") + ring_ab.gen("a")

    @given(laurent_polys(RING_ST), laurent_polys(RING_ST), laurent_polys(RING_ST))
    def test_ring_axioms(self, p, q, r):
        """Test commutativity, associativity and distributivity."""
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


class TestSubstitution:
    """Tests for monomial substitution."""

    def test_substitute_into_other_variable(self):
        """Test b -> t^3 followed by coercion to a one-variable ring."""
        ring = Ring(("a", "b", "t"))
        b = ring.gen("b")
        result = (1 - b + b ** 2).substitute("b", "t", 3)
        t_ring = Ring(("t",))
        t = t_ring.gen("t")
        assert result.coerce(t_ring) == 1 - t ** 3 + t ** 6

    def test_substitute_by_one(self):
        """Test that exponent 0 sends a variable to one."""
        ring = Ring(("a",))
        assert (ring.gen("a") - 1).substitute("a", "a", 0).is_zero

    def test_simultaneous(self, ring_ab):
        """Test that substitute_many swaps variables without interference."""
        a, b = ring_ab.gen("a"), ring_ab.gen("b")
        swapped = (a * b ** 2).substitute_many({"a": ("b", 1), "b": ("a", 1)})
        assert swapped == a ** 2 * b

    def test_rename(self, ring_ab, ring_st):
        """Test moving a polynomial between rings."""
        a, b = ring_ab.gen("a"), ring_ab.gen("b")
        s, t = ring_st.gen("s"), ring_st.gen("t")
        assert (a - b ** 2).rename({"a": "s", "b": "t"}, ring_st) == s - t ** 2

    def test_rename_missing_target(self, ring_ab):
        """Test that an unmapped variable raises."""
        with pytest.raises(SizeMismatchError):
            ring_ab.gen("b").rename({}, Ring(("a",)))

    @settings(max_examples=50, deadline=None)
    @given(
        laurent_polys(RING_ST),
        laurent_polys(RING_ST),
        st.sampled_from(["s", "t"]),
        st.sampled_from(["s", "t"]),
        st.integers(-3, 3),
    )
    def test_substitution_is_homomorphism(self, p, q, v, target, k):
        """Test that substitution respects sums and products."""
        assert (p + q).substitute(v, target, k) == p.substitute(v, target, k) + q.substitute(v, target, k)
        assert (p * q).substitute(v, target, k) == p.substitute(v, target, k) * q.substitute(v, target, k)


class TestExactDivision:
    """Tests for exact Laurent division."""

    def test_cyclotomic_quotient(self, ring_t):
        """Test (1 - t^6) / (1 - t^2)."""
        t = ring_t.gen("t")
        assert (1 - t ** 6).exact_div(1 - t ** 2) == 1 + t ** 2 + t ** 4

    def test_negative_exponents(self, ring_t):
        """Test that monomial content is shifted out and restored."""
        t = ring_t.gen("t")
        assert (t ** -1 - t).exact_div(1 - t) == t ** -1 + 1

    def test_monomial_divisor(self, ring_t):
        """Test the single-term fast path."""
        t = ring_t.gen("t")
        assert (t ** 3 - t).exact_div(t) == t ** 2 - 1
        assert (2 * t).exact_div(-2) == -t

    def test_integer_remainder(self, ring_t):
        """Test that a coefficient remainder is a finding."""
        with pytest.raises(NotDivisibleError):
            (3 * ring_t.gen("t")).exact_div(2)

    def test_polynomial_remainder(self, ring_t):
        """Test that a polynomial remainder is a finding with context."""
        t = ring_t.gen("t")
        with pytest.raises(NotDivisibleError) as exc_info:
            (t + 1).exact_div(t - 1, context="unit test")
        assert exc_info.value.code == "not_divisible"
        assert exc_info.value.details["context"] == "unit test"

    def test_division_by_zero(self, ring_t):
        """Test that zero divisors raise ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            ring_t.gen("t").exact_div(0)

    def test_zero_dividend(self, ring_t):
        """Test that zero divides to zero."""
        assert ring_t.zero().exact_div(ring_t.gen("t") + 1).is_zero

    @settings(max_examples=50, deadline=None)
    @given(laurent_polys(RING_ST), nonzero_laurent_polys(RING_ST))
    def test_product_recovers_factor(self, p, q):
        """Test that (p * q) / q == p."""
        assert (p * q).exact_div(q) == p


class TestUnits:
    """Tests for unit normalization."""

    def test_normalize(self, ring_t):
        """Test that -t^-2 + t^-1 normalizes to t - 1."""
        t = ring_t.gen("t")
        p = -(t ** -2) + t ** -1
        canonical, mono, sign = p.normalize_units()
        assert canonical == t - 1
        assert mono == Monomial((2,))
        assert sign == 1

    def test_equals_up_to_units(self, ring_t, ring_st):
        """Test associates and non-associates."""
        t = ring_t.gen("t")
        assert (t - 1).equals_up_to_units(-(t ** 5) + t ** 4)
        assert not (t - 1).equals_up_to_units(t + 1)
        s, u = ring_st.gen("s"), ring_st.gen("t")
        assert (s * u - s).equals_up_to_units(u - 1)
        assert not (u - 1).equals_up_to_units(s - 1)

    def test_zero_is_canonical(self, ring_t):
        """Test that zero stays zero."""
        assert ring_t.zero().canonical().is_zero

    @given(nonzero_laurent_polys(RING_ST))
    def test_canonical_associate(self, p):
        """Test that the reported unit really produces the canonical form."""
        canonical, mono, sign = p.normalize_units()
        unit = LaurentPoly(p.ring, {mono: sign})
        assert canonical == unit * p
        assert canonical.canonical() == canonical
        assert min(m.exponents[0] for m in canonical.terms) == 0
        assert min(m.exponents[1] for m in canonical.terms) == 0


class TestGcd:
    """Tests for the polynomial gcd."""

    def test_common_factor(self, ring_t):
        """Test gcd(t^2 - 1, t^3 - 1) = t - 1."""
        t = ring_t.gen("t")
        assert gcd([t ** 2 - 1, t ** 3 - 1]) == t - 1

    def test_integer_content(self, ring_t):
        """Test that integer content is kept."""
        t = ring_t.gen("t")
        assert gcd([2 * t + 2, 4 * t ** 2 - 4]) == 2 * t + 2
        assert gcd([ring_t.constant(2), ring_t.constant(4)]) == 2

    def test_monomial_content_ignored(self, ring_st):
        """Test that monomial factors are units."""
        s, t = ring_st.gen("s"), ring_st.gen("t")
        assert gcd([s * t - s, t ** 2 - 2 * t + 1]) == t - 1

    def test_unit_short_circuits(self, ring_t):
        """Test that a unit gcd is one."""
        t = ring_t.gen("t")
        assert gcd([t - 1, ring_t.one(), t ** 2 + 1]) == 1

    def test_zeros(self, ring_t):
        """Test that zeros are ignored and all-zero gives zero."""
        t = ring_t.gen("t")
        assert gcd([ring_t.zero(), ring_t.zero()]).is_zero
        assert gcd([ring_t.zero(), t ** 2 - 1]) == t ** 2 - 1

    def test_empty(self):
        """Test that an empty family raises."""
        with pytest.raises(ValueError):
            gcd([])

    def test_divides_every_input(self, ring_t):
        """Test that gcd(t^2 - 1, t^3 - 1, 2t - 2) = t - 1 divides all three."""
        t = ring_t.gen("t")
        family = [t ** 2 - 1, t ** 3 - 1, 2 * t - 2]
        g = gcd(family)
        assert g == t - 1
        for p in family:
            assert (g * p.exact_div(g)) == p

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(nonzero_laurent_polys(RING_ST), min_size=1, max_size=3),
        nonzero_laurent_polys(RING_ST, max_terms=2),
    )
    def test_divides_every_input_property(self, family, factor):
        """Test that the gcd exactly divides each member and keeps a common factor."""
        family = [p * factor for p in family]
        g = gcd(family)
        for p in family:
            assert g * p.exact_div(g) == p
        assert not g.exact_div(factor).is_zero


class TestRendering:
    """Tests for text output and the JSON term codec."""

    def test_plain(self, ring_t, ring_ab):
        """Test plain rendering."""
        t = ring_t.gen("t")
        a, b = ring_ab.gen("a"), ring_ab.gen("b")
        assert (t ** 6 - t ** 3 + 1).to_plain() == "t^6 - t^3 + 1"
        assert (-a * b ** 2 + 2).to_plain() == "-a*b^2 + 2"
        assert (t - t ** -1).to_plain() == "t - t^-1"
        assert (2 * t).to_plain() == "2*t"
        assert ring_t.zero().to_plain() == "0"

    def test_latex(self, ring_t, ring_ab):
        """Test LaTeX rendering."""
        t = ring_t.gen("t")
        assert (t ** 10 - t ** 5 + 1).to_latex() == "t^{10} - t^{5} + 1"
        assert (ring_ab.gen("a") * ring_ab.gen("b")).to_latex() == "a b"

    def test_terms(self, ring_t):
        """Test the JSON term list."""
        t = ring_t.gen("t")
        p = t ** 6 - t ** 3 + 1
        assert p.to_terms() == [[1, {"t": 6}], [-1, {"t": 3}], [1, {}]]
        assert LaurentPoly.from_terms(ring_t, p.to_terms()) == p

    def test_malformed_terms(self, ring_t):
        """Test that malformed term lists are rejected."""
        with pytest.raises(ValueError):
            LaurentPoly.from_terms(ring_t, [["x", {}]])

    @given(st.integers(-50, 50))
    def test_constant_equals_int(self, c):
        """Test comparison with plain integers."""
        assert Ring(("t",)).constant(c) == c
