"""
Exceptions for the poly_core module.
"""
from l1lab.core.exceptions import NumericalError


class PolynomialError(NumericalError):
    """Base exception for polynomial and impulse-response errors."""
    pass


class NotMinimumPhase(PolynomialError):
    """b(λ) has a root on or inside the unit disk, or b_1 = 0."""
    pass


class NonConvergent(PolynomialError):
    """The impulse-response tail bound did not reach tolerance within max_len."""
    pass
