"""
Solver exceptions for the lfp_solver module.
"""
from l1lab.core.exceptions import NumericalError


class SolverError(NumericalError):
    """Base exception for LP and LFP errors."""
    pass


class EmptyPolytope(SolverError):
    """The polyhedron has no feasible point."""
    pass


class IterationLimit(SolverError):
    """The simplex exceeded its pivot budget; the instance is degenerate or badly scaled."""
    pass


class DenominatorNotPositive(SolverError):
    """The fractional objective's denominator is not positive at the returned point."""
    pass


class NumericalInstability(SolverError):
    """The simplex could not return a point that satisfies the constraints it was given."""
    pass
