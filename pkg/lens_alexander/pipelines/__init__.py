"""
Pipelines package: one pipeline per computation mode.
"""

from lens_alexander.pipelines.base import OracleCheck, Pipeline, PipelineResult
from lens_alexander.pipelines.factory import PipelineFactory

__all__ = ["OracleCheck", "Pipeline", "PipelineFactory", "PipelineResult"]
