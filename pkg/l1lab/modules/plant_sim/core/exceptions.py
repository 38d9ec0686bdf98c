"""
Plant simulation exceptions for the plant_sim module.
"""
from typing import Optional

from l1lab.core.exceptions import NumericalError


class PlantError(NumericalError):
    """Base exception for plant and disturbance errors."""
    pass


class NonFinite(PlantError):
    """The output overflowed; the closed loop is unstable."""

    def __init__(self, message: str, t: Optional[int] = None):
        super().__init__(message)
        self.t = t


class MissingAux(PlantError):
    """The worst-case disturbance needs the current estimate and regressor."""
    pass


class EnvelopeViolation(PlantError):
    """A generated disturbance left the |v| ≤ δ^w + δ^y p^y + δ^u p^u envelope."""
    pass


class SequenceExhausted(PlantError):
    """A custom disturbance sequence has no entry for the requested time."""
    pass
