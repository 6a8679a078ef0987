"""
Concrete pipelines, one per computation mode.
"""

from typing import Optional

from lens_alexander.algebra.laurent import Ring
from lens_alexander.braids.parser import parse_braid, parse_plain_braid
from lens_alexander.braids.words import MixedBraidWord, PlainBraidWord
from lens_alexander.invariants.alexander import (
    alex_classical_knot,
    alex_classical_multivariable,
    alex_lens,
    alex_solid_torus,
    alex_with_axis,
    multivariable_ring,
    solid_torus_determinant,
)
from lens_alexander.oracle.fox import (
    FIXED_VARIABLE,
    MOVING_VARIABLE,
    oracle_multivariable,
    oracle_two_variable,
    two_variable_ring,
)
from lens_alexander.pipelines.base import OracleCheck, Pipeline, PipelineResult
from lens_alexander.representations.burau import MixedColoring


class _MixedPipeline(Pipeline):
    """Shared parsing and oracle for words in B_(1,n)."""

    coloring = MixedColoring.default()

    def parse(self) -> MixedBraidWord:
        return parse_braid(self.job.word, self.job.n)

    def oracle_check(self, result: PipelineResult) -> Optional[OracleCheck]:
        # The oracle validates the two-variable polynomial feeding the surgery step.
        delta2 = alex_solid_torus(self.word, self.coloring)
        expected = delta2.rename(
            {self.coloring.fixed.name: FIXED_VARIABLE, self.coloring.moving.name: MOVING_VARIABLE},
            two_variable_ring(),
        )
        oracle = oracle_two_variable(self.word)
        return OracleCheck(oracle.equals_up_to_units(expected), oracle, expected)


class LensPipeline(_MixedPipeline):
    """Alexander polynomial of a link in L(p,q)."""

    def compute(self) -> PipelineResult:
        res = alex_lens(
            self.word, self.job.p, self.job.q, coloring=self.coloring, verify=self.verify_paths
        )
        return PipelineResult(
            res.polynomial,
            {
                "beta_class": res.beta_class,
                "p_prime": res.p_prime,
                "beta_prime": res.beta_prime,
                "nu": res.nu,
                "determinant": res.determinant,
                "route": res.route,
            },
        )


class SolidTorusPipeline(_MixedPipeline):
    """Two-variable polynomial of the mixed link in S^3."""

    def compute(self) -> PipelineResult:
        return PipelineResult(
            alex_solid_torus(self.word, self.coloring),
            {
                "beta_class": self.word.t_exponent_sum(),
                "nu": self.word.component_partition().nu,
                "determinant": solid_torus_determinant(self.word, self.coloring),
            },
        )


class _ClassicalPipeline(Pipeline):
    def parse(self) -> PlainBraidWord:
        return parse_plain_braid(self.job.word, self.job.n)

    def _oracle_ring(self) -> Ring:
        return multivariable_ring(self.word.component_partition().nu)

    def oracle_check(self, result: PipelineResult) -> Optional[OracleCheck]:
        oracle = oracle_multivariable(self.word, self._oracle_ring())
        expected = result.polynomial.coerce(oracle.ring)
        return OracleCheck(oracle.equals_up_to_units(expected), oracle, expected)


class ClassicalPipeline(_ClassicalPipeline):
    """One-variable polynomial of a classical knot."""

    def compute(self) -> PipelineResult:
        return PipelineResult(alex_classical_knot(self.word), {"nu": 1})


class MultivariablePipeline(_ClassicalPipeline):
    """Multivariable polynomial of a classical link."""

    def compute(self) -> PipelineResult:
        partition = self.word.component_partition()
        return PipelineResult(
            alex_classical_multivariable(self.word),
            {
                "nu": partition.nu,
                "components": [list(c) for c in partition.cycles],
            },
        )


class AxisPipeline(_ClassicalPipeline):
    """Closed braid together with its axis."""

    def compute(self) -> PipelineResult:
        partition = self.word.component_partition()
        return PipelineResult(
            alex_with_axis(self.word),
            {"nu": partition.nu, "components": [list(c) for c in partition.cycles]},
        )

    def oracle_check(self, result: PipelineResult) -> Optional[OracleCheck]:
        return None
