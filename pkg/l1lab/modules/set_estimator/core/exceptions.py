"""
Estimator exceptions for the set_estimator module.
"""
from typing import Optional

from l1lab.core.exceptions import NumericalError


class EstimatorError(NumericalError):
    """Base exception for estimation errors."""
    pass


class Falsified(EstimatorError):
    """
    The collected data contradict the a priori parameter set.

    Carries the time of the contradicting measurement.
    """

    def __init__(self, message: str, t: Optional[int] = None):
        super().__init__(message)
        self.t = t


class ScheduleUndefined(EstimatorError):
    """The dead-zone schedule parameters admit no valid ε."""
    pass
