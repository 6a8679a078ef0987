"""
Factory for creating pipelines.
"""

from typing import Dict, Type, Union

from lens_alexander.errors.exceptions import LensAlexanderError
from lens_alexander.models.job import JobSpec, Mode
from lens_alexander.pipelines.base import Pipeline
from lens_alexander.pipelines.modes import (
    AxisPipeline,
    ClassicalPipeline,
    LensPipeline,
    MultivariablePipeline,
    SolidTorusPipeline,
)
from lens_alexander.utils.logging import get_logger

logger = get_logger(__name__)


class PipelineFactory:
    """
    Factory for creating the pipeline that serves a job's mode.
    """

    # Registry of pipeline types
    _pipeline_types: Dict[Mode, Type[Pipeline]] = {
        Mode.LENS: LensPipeline,
        Mode.SOLID_TORUS: SolidTorusPipeline,
        Mode.CLASSICAL: ClassicalPipeline,
        Mode.MULTIVARIABLE: MultivariablePipeline,
        Mode.AXIS: AxisPipeline,
    }

    @classmethod
    def register_pipeline_type(cls, mode: Mode, pipeline_class: Type[Pipeline]) -> None:
        """
        Register a pipeline for a mode.

        Raises:
            LensAlexanderError: If the mode already has a pipeline
        """
        if mode in cls._pipeline_types:
            raise LensAlexanderError(f"Pipeline for mode '{mode.value}' is already registered")
        cls._pipeline_types[mode] = pipeline_class
        logger.debug("Registered pipeline type", mode=mode.value)

    @classmethod
    def pipeline_class(cls, mode: Union[Mode, str]) -> Type[Pipeline]:
        """
        Resolve a mode (enum or name) to its pipeline class.

        Raises:
            LensAlexanderError: If no pipeline serves the mode
        """
        if isinstance(mode, str) and not isinstance(mode, Mode):
            try:
                mode = Mode.from_string(mode)
            except ValueError as e:
                raise LensAlexanderError(str(e))
        try:
            return cls._pipeline_types[mode]
        except KeyError:
            raise LensAlexanderError(
                f"Unknown mode: '{mode}'. "
                f"Available modes: {', '.join(m.value for m in cls._pipeline_types)}"
            ) from None

    @classmethod
    def create_pipeline(cls, job: JobSpec, verify_paths: bool = False) -> Pipeline:
        """
        Create the pipeline for ``job``.

        Args:
            job: Validated job description
            verify_paths: Compare both lens routes

        Returns:
            Unstarted pipeline
        """
        pipeline = cls.pipeline_class(job.mode)(job, verify_paths=verify_paths)
        logger.debug("Created pipeline", type=type(pipeline).__name__)
        return pipeline
