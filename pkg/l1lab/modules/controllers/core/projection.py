"""
Euclidean projection onto a polyhedron by Dykstra's alternating projections.
"""
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional, Sequence

import numpy as np

from l1lab.modules.lfp_solver import Polyhedron

from .exceptions import ProjectionNotConverged


@dataclass
class ProjectionOptions:
    """Stopping rule of the projection."""
    tol: float = 1e-10
    max_sweeps: int = 10_000
    feasibility_tol: float = 1e-8

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "ProjectionOptions":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in (data or {}).items() if k in known})


def project_onto_polytope(x: Sequence[float], poly: Polyhedron,
                          options: Optional[ProjectionOptions] = None) -> np.ndarray:
    """
    Nearest point of the polyhedron to x.

    Each sweep projects onto every halfspace in turn, carrying one Dykstra
    correction per halfspace; iteration stops once a sweep moves the
    iterate less than ``tol`` and the point is feasible.

    Raises:
        ProjectionNotConverged: ``max_sweeps`` sweeps without convergence
    """
    opts = options or ProjectionOptions()
    x = np.array(x, dtype=float)
    if poly.contains(x, opts.feasibility_tol):
        return x

    A, c = poly.A, poly.c
    norms_sq = np.einsum("ij,ij->i", A, A)
    active = norms_sq > 0.0
    corrections = np.zeros_like(A)

    for _ in range(opts.max_sweeps):
        previous = x.copy()
        for i in np.flatnonzero(active):
            y = x + corrections[i]
            gap = c[i] - A[i] @ y
            x = y + (gap / norms_sq[i]) * A[i] if gap > 0.0 else y
            corrections[i] = y - x
        if np.linalg.norm(x - previous) < opts.tol and poly.contains(x, opts.feasibility_tol):
            return x

    raise ProjectionNotConverged(f"No convergence after {opts.max_sweeps} sweeps over {poly.n_rows} halfspaces")
