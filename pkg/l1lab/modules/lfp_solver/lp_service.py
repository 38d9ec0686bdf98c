"""
LP service - the solver entry point other modules get from the registry.
"""
from typing import Any, Dict, Optional

import numpy as np

from l1lab.core.core_apis import CoreLoggerAPI

from .core.polyhedron import Polyhedron
from .core.simplex import lp_minimize
from .core.fractional import lfp_minimize
from .core.types import AffineLike, LpSolution, LpStatus, SolverOptions


class LpService:
    """
    Solver facade bound to the ``solver`` settings section.

    Keeps simple counters so long runs can report how much LP work they did.
    """

    def __init__(self, options: Optional[SolverOptions] = None):
        self.options = options or SolverOptions()
        self._logger: Optional[CoreLoggerAPI] = None
        self._solves = 0
        self._pivots = 0
        self._infeasible = 0

    def set_logger(self, logger: Optional[CoreLoggerAPI]):
        self._logger = logger

    def _record(self, solution: LpSolution) -> LpSolution:
        self._solves += 1
        self._pivots += solution.iterations
        if solution.status is LpStatus.INFEASIBLE:
            self._infeasible += 1
            if self._logger:
                self._logger.log(f"Infeasible program after {solution.iterations} pivots",
                                 level="DEBUG", tag="lp")
        return solution

    def minimize(self, objective, poly: Polyhedron, A_eq=None, b_eq=None) -> LpSolution:
        return self._record(lp_minimize(objective, poly, A_eq, b_eq, self.options))

    def minimize_fractional(self, num: AffineLike, den: AffineLike, poly: Polyhedron) -> LpSolution:
        return self._record(lfp_minimize(num, den, poly, self.options))

    def is_empty(self, poly: Polyhedron) -> bool:
        """True iff the polyhedron has no feasible point."""
        solution = self.minimize(np.zeros(poly.dim), poly)
        return solution.status is LpStatus.INFEASIBLE

    @property
    def stats(self) -> Dict[str, Any]:
        return {"solves": self._solves, "pivots": self._pivots, "infeasible": self._infeasible}
