"""
Controller exceptions for the controllers module.
"""
from l1lab.core.exceptions import NumericalError


class ControllerError(NumericalError):
    """Base exception for control-law errors."""
    pass


class ProjectionNotConverged(ControllerError):
    """Dykstra's projection hit its sweep limit."""
    pass
