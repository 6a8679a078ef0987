"""
Batch tabulation: one job per input line, one JSON record per job.

A line holds a braid word, optionally followed by ``; n ; p ; q`` overrides.
Empty override fields fall back to the shared flags. Blank lines and lines
starting with ``#`` are skipped.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional

from pydantic import ValidationError

from lens_alexander.errors.exceptions import BusinessError, LensAlexanderError
from lens_alexander.models.job import BatchRecord, JobSpec, Mode
from lens_alexander.pipelines.factory import PipelineFactory
from lens_alexander.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BatchDefaults:
    """Flags shared by every line of a batch."""

    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    mode: Mode = Mode.LENS
    oracle: bool = False
    verify: bool = False


def _optional_int(field: str, fallback: Optional[int], name: str) -> Optional[int]:
    field = field.strip()
    if not field:
        return fallback
    try:
        return int(field)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{field}'") from None


def parse_batch_line(line: str, defaults: BatchDefaults) -> JobSpec:
    """
    Build the job for one input line.

    Raises:
        ValueError: On malformed override fields
        ValidationError: If the resulting job is invalid
    """
    fields = line.split(";")
    if len(fields) > 4:
        raise ValueError(f"Expected at most 4 ';'-separated fields, got {len(fields)}")
    fields += [""] * (4 - len(fields))
    word = fields[0].strip()
    n = _optional_int(fields[1], defaults.n, "n")
    p = _optional_int(fields[2], defaults.p, "p")
    q = _optional_int(fields[3], defaults.q, "q")
    if n is None:
        raise ValueError("no strand count: pass --n or a per-line override")
    if defaults.mode is not Mode.LENS:
        p = q = None
    return JobSpec(
        word=word, n=n, p=p, q=q, mode=defaults.mode,
        oracle=defaults.oracle, verify=defaults.verify,
    )


def process_line(line: str, defaults: BatchDefaults) -> BatchRecord:
    """Compute one record; failures become error records."""
    word = line.split(";")[0].strip()
    try:
        job = parse_batch_line(line, defaults)
    except ValidationError as e:
        return BatchRecord(word=word, error=e.errors()[0]["msg"], error_code="invalid_job")
    except ValueError as e:
        return BatchRecord(word=word, error=str(e), error_code="invalid_job")

    record = {"word": job.word, "n": job.n, "p": job.p, "q": job.q, "mode": job.mode.value}
    try:
        pipeline = PipelineFactory.create_pipeline(job)
        result = pipeline.run()
    except BusinessError as e:
        logger.warning("Batch line failed", word=job.word, code=e.code, details=e.details)
        return BatchRecord(**record, error=e.message, error_code=e.code)
    except LensAlexanderError as e:
        return BatchRecord(**record, error=str(e), error_code=type(e).__name__)
    except Exception as e:
        logger.exception("Batch line crashed", word=job.word)
        return BatchRecord(**record, error=f"{type(e).__name__}: {e}", error_code="internal_error")

    diagnostics = result.diagnostics
    return BatchRecord(
        **record,
        beta_class=diagnostics.get("beta_class"),
        nu=diagnostics.get("nu"),
        polynomial=result.polynomial.to_terms(),
        variables=list(result.polynomial.ring.names),
        agree_oracle=result.oracle.agrees if result.oracle is not None else None,
    )


def run_batch(lines: Iterable[str], defaults: BatchDefaults, threads: int = 1) -> List[BatchRecord]:
    """
    Process lines concurrently; records come back in input order.

    Args:
        lines: Raw input lines
        defaults: Shared flags
        threads: Worker thread cap
    """
    jobs = [line.rstrip("\n") for line in lines]
    jobs = [line for line in jobs if line.strip() and not line.lstrip().startswith("#")]
    if not jobs:
        return []
    with ThreadPoolExecutor(max_workers=max(1, min(threads, len(jobs)))) as pool:
        records = list(pool.map(lambda line: process_line(line, defaults), jobs))
    failed = sum(1 for r in records if r.error is not None)
    logger.info("Batch finished", lines=len(records), failed=failed)
    return records
