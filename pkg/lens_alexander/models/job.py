"""
Job configuration and batch output records.

This module defines the computation modes, output formats, the validated
description of a single computation and the per-line record written by
batch runs.
"""

from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Mode(str, Enum):
    """Which invariant a job computes."""
    LENS = "lens"
    SOLID_TORUS = "solid-torus"
    CLASSICAL = "classical"
    MULTIVARIABLE = "multivariable"
    AXIS = "axis"

    @classmethod
    def from_string(cls, value: str) -> "Mode":
        """
        Convert string to Mode enum.

        Args:
            value: String representation of the mode

        Returns:
            Mode enum value

        Raises:
            ValueError: If the string is not a valid mode
        """
        normalized = value.lower().strip().replace("_", "-")
        for mode in cls:
            if mode.value == normalized:
                return mode
        raise ValueError(f"Invalid mode: {value}. Valid options are: {[m.value for m in cls]}")


class OutputFormat(str, Enum):
    """Supported output formats."""
    PLAIN = "plain"
    LATEX = "latex"
    JSON = "json"

    @classmethod
    def from_string(cls, value: str) -> "OutputFormat":
        normalized = value.lower().strip()
        for fmt in cls:
            if fmt.value == normalized:
                return fmt
        raise ValueError(f"Invalid output format: {value}. Valid options are: {[f.value for f in cls]}")


class JobSpec(BaseModel):
    """
    One computation request.

    ``n`` counts moving strands for mixed modes and all strands for the
    classical modes. ``p`` and ``q`` are given exactly when the mode is lens.
    """

    model_config = ConfigDict(frozen=True)

    word: str = ""
    n: int = Field(ge=1)
    p: Optional[int] = None
    q: Optional[int] = None
    mode: Mode = Mode.LENS
    oracle: bool = False
    format: OutputFormat = OutputFormat.PLAIN
    verify: bool = False

    @model_validator(mode="after")
    def _check_surgery(self) -> "JobSpec":
        has_surgery = self.p is not None and self.q is not None
        if self.mode is Mode.LENS and not has_surgery:
            raise ValueError("lens mode requires both p and q")
        if self.mode is not Mode.LENS and (self.p is not None or self.q is not None):
            raise ValueError(f"p and q are only accepted in lens mode, not {self.mode.value}")
        return self


class BatchRecord(BaseModel):
    """One output line of a batch run; ``error`` is set instead of results on failure."""

    word: str
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    mode: Optional[str] = None
    beta_class: Optional[int] = None
    nu: Optional[int] = None
    polynomial: Optional[List[List[Any]]] = None
    variables: Optional[List[str]] = None
    agree_oracle: Optional[bool] = None
    error: Optional[str] = None
    error_code: Optional[str] = None

    def to_json_line(self) -> str:
        """Compact JSON with unset fields omitted."""
        return self.model_dump_json(exclude_none=True)
