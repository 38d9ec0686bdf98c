"""
Type definitions for the lfp_solver module.
"""
from dataclasses import dataclass, fields
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np


class LpStatus(Enum):
    """Termination status of the simplex."""
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class SolverOptions:
    """
    Tolerances and limits for the dense simplex.

    ``verify_tol`` bounds the relative constraint violation of a returned
    point; ``max_refinements`` caps the Dinkelbach steps of a fractional solve.
    """
    feasibility_tol: float = 1e-8
    pivot_tol: float = 1e-10
    iteration_factor: int = 50
    sigma_min: float = 1e-9
    refactor_every: int = 25
    verify_tol: float = 1e-7
    max_refinements: int = 50

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "SolverOptions":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in (data or {}).items() if k in known})


@dataclass
class LpSolution:
    """
    Result of an LP or LFP solve.

    ``duals`` holds one nonnegative multiplier per inequality row of the
    polyhedron when the status is optimal.
    """
    status: LpStatus
    point: Optional[np.ndarray] = None
    value: Optional[float] = None
    iterations: int = 0
    duals: Optional[np.ndarray] = None

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "point": None if self.point is None else self.point.tolist(),
            "value": self.value,
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class AffineFunctional:
    """z ↦ weights·z + offset."""
    weights: np.ndarray
    offset: float = 0.0

    def __call__(self, z: Sequence[float]) -> float:
        return float(np.dot(self.weights, z) + self.offset)


AffineLike = Union[AffineFunctional, tuple]


def as_affine(f: AffineLike) -> AffineFunctional:
    """Accept an AffineFunctional or a ``(weights, offset)`` pair."""
    if isinstance(f, AffineFunctional):
        return AffineFunctional(np.asarray(f.weights, dtype=float), float(f.offset))
    weights, offset = f
    return AffineFunctional(np.asarray(weights, dtype=float), float(offset))
