"""
Tests for removing a component from a multivariable polynomial.
"""

import pytest

from lens_alexander.algebra.laurent import Ring
from lens_alexander.braids.parser import parse_plain_braid
from lens_alexander.errors.exceptions import BusinessError
from lens_alexander.invariants.alexander import alex_classical_multivariable, torres_reduce


class TestTorresReduce:
    """Tests for torres_reduce."""

    def test_drop_unlinked_variable(self, ring_ab):
        """Test that a polynomial free of the dropped variable survives."""
        b = ring_ab.gen("b")
        result = torres_reduce(b ** 2 - b + 1, ring_ab.var("a"), {ring_ab.var("b"): 1})
        ring_b = Ring(("b",))
        assert result.ring == ring_b
        assert result == ring_b.gen("b") ** 2 - ring_b.gen("b") + 1

    def test_hopf_to_unknot(self):
        """Test that dropping one Hopf component leaves the unknot."""
        delta = alex_classical_multivariable(parse_plain_braid("s1^2", 2))
        ring = delta.ring
        result = torres_reduce(delta, ring.var("t_2"), {ring.var("t_1"): 1})
        assert result.ring.names == ("t_1",)
        assert result == 1

    def test_degenerate_linking(self, ring_ab):
        """Test that vanishing linking numbers are reported."""
        with pytest.raises(BusinessError) as exc_info:
            torres_reduce(ring_ab.one(), ring_ab.var("a"), {ring_ab.var("b"): 0})
        assert exc_info.value.code == "degenerate_linking"
