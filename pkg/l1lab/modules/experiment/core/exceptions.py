"""
Experiment exceptions.
"""
from pathlib import Path
from typing import Optional, Union

from l1lab.core.exceptions import FrameworkError


class ExperimentError(FrameworkError):
    """Base exception for the experiment harness."""
    pass


class EmitError(ExperimentError):
    """Writing a run artefact failed."""

    def __init__(self, message: str, path: Optional[Union[str, Path]] = None):
        super().__init__(f"{message}: {path}" if path is not None else message)
        self.path = str(path) if path is not None else None
