"""
Job and record models for Lens Alexander.
"""

from lens_alexander.models.job import BatchRecord, JobSpec, Mode, OutputFormat

__all__ = ["BatchRecord", "JobSpec", "Mode", "OutputFormat"]
