"""
Base class for invariant pipelines.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

from lens_alexander.algebra.laurent import LaurentPoly
from lens_alexander.braids.words import MixedBraidWord, PlainBraidWord
from lens_alexander.errors.exceptions import LensAlexanderError, OracleDisagreementError
from lens_alexander.models.job import JobSpec
from lens_alexander.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class OracleCheck:
    """Outcome of the Fox-calculus cross-check."""

    agrees: bool
    oracle: LaurentPoly
    expected: LaurentPoly


@dataclass
class PipelineResult:
    """Polynomial plus ordered diagnostics."""

    polynomial: LaurentPoly
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    oracle: Optional[OracleCheck] = None


class Pipeline(ABC):
    """
    Abstract base class for all pipelines.

    A pipeline parses the job's word, computes one invariant and optionally
    cross-checks it against the Fox-calculus oracle.
    """

    def __init__(self, job: JobSpec, verify_paths: bool = False):
        """
        Initialize a pipeline.

        Args:
            job: Validated job description
            verify_paths: Force two-route verification where a mode supports it
        """
        self.job = job
        self.verify_paths = verify_paths or job.verify
        self.word: Optional[Union[MixedBraidWord, PlainBraidWord]] = None
        self.result: Optional[PipelineResult] = None

    @abstractmethod
    def parse(self) -> Union[MixedBraidWord, PlainBraidWord]:
        """Parse the job's word text."""

    @abstractmethod
    def compute(self) -> PipelineResult:
        """Compute the invariant of ``self.word``."""

    def oracle_check(self, result: PipelineResult) -> Optional[OracleCheck]:
        """Compare ``result`` with the oracle; ``None`` when the mode has no oracle."""
        return None

    def run(self) -> PipelineResult:
        """
        Parse, compute and, when requested, cross-check.

        Returns:
            The populated result
        """
        log = logger.bind(mode=self.job.mode.value, word=self.job.word, n=self.job.n)
        log.debug("Pipeline started")
        self.word = self.parse()
        result = self.compute()
        if self.job.oracle:
            result.oracle = self.oracle_check(result)
            if result.oracle is None:
                log.warning("No oracle available for this mode")
            elif not result.oracle.agrees:
                log.error(
                    "Oracle disagreement",
                    burau=str(result.oracle.expected),
                    oracle=str(result.oracle.oracle),
                )
        self.result = result
        log.debug("Pipeline finished", polynomial=str(result.polynomial))
        return result

    def to_json(self) -> Dict[str, Any]:
        """
        JSON representation of the computed result.

        Raises:
            LensAlexanderError: If ``run()`` has not been called
        """
        if self.result is None:
            raise LensAlexanderError("Pipeline has not been run. Call run() first.")
        poly = self.result.polynomial
        data: Dict[str, Any] = {
            "word": self.job.word,
            "n": self.job.n,
            "mode": self.job.mode.value,
        }
        if self.job.p is not None:
            data["p"] = self.job.p
            data["q"] = self.job.q
        data["variables"] = list(poly.ring.names)
        data["polynomial"] = poly.to_terms()
        for key, value in self.result.diagnostics.items():
            data[key] = value.to_terms() if isinstance(value, LaurentPoly) else value
        if self.result.oracle is not None:
            data["agree_oracle"] = self.result.oracle.agrees
        return data

    def require_oracle_agreement(self) -> None:
        """
        Raise when the oracle ran and disagreed with the computed result.

        Raises:
            OracleDisagreementError: If ``result.oracle`` reports a mismatch
        """
        check = self.result.oracle if self.result is not None else None
        if check is not None and not check.agrees:
            raise OracleDisagreementError(check.expected, check.oracle, self.job.word)
