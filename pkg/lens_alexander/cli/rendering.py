"""
Rendering of pipeline results for the terminal.
"""

import json
from typing import Any, List

from lens_alexander.algebra.laurent import LaurentPoly
from lens_alexander.models.job import OutputFormat
from lens_alexander.pipelines.base import Pipeline


def render_polynomial(poly: LaurentPoly, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.LATEX:
        return poly.to_latex()
    if fmt is OutputFormat.JSON:
        return json.dumps(poly.to_terms())
    return poly.to_plain()


def render_diagnostics(pipeline: Pipeline, fmt: OutputFormat) -> List[str]:
    """``key: value`` lines for stderr."""
    lines: List[str] = []
    for key, value in pipeline.result.diagnostics.items():
        if isinstance(value, LaurentPoly):
            value = render_polynomial(value, fmt)
        lines.append(f"{key}: {value}")
    return lines


def render_result(pipeline: Pipeline, fmt: OutputFormat) -> str:
    """The stdout payload: the polynomial, or the whole record in JSON mode."""
    if fmt is OutputFormat.JSON:
        return json.dumps(pipeline.to_json())
    return render_polynomial(pipeline.result.polynomial, fmt)


def describe_oracle(pipeline: Pipeline) -> Any:
    check = pipeline.result.oracle
    if check is None:
        return None
    status = "agrees" if check.agrees else "DISAGREES"
    return f"oracle {status}: fox {check.oracle}, burau {check.expected}"
