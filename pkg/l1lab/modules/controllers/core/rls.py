"""
Recursive least squares with projection onto the parameter polytope.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from l1lab.modules.lfp_solver import Polyhedron

from .projection import ProjectionOptions, project_onto_polytope


@dataclass
class RlsState:
    """Estimate ξ̂ and covariance P."""
    xi_hat: np.ndarray
    P: np.ndarray

    @classmethod
    def initial(cls, xi0: Sequence[float], p0: float = 0.001) -> "RlsState":
        xi0 = np.array(xi0, dtype=float)
        return cls(xi0, p0 * np.eye(xi0.size))


def rls_step(rls: RlsState, phi: Sequence[float], y_next: float, Xi: Polyhedron,
             options: Optional[ProjectionOptions] = None) -> RlsState:
    """
    K = Pφ/(1 + φᵀPφ), ξ̂ ← Pr_Ξ(ξ̂ + K(y − ξ̂ᵀφ)), P ← (I − Kφᵀ)P.
    """
    phi = np.asarray(phi, dtype=float)
    P_phi = rls.P @ phi
    gain = P_phi / (1.0 + phi @ P_phi)
    xi = rls.xi_hat + gain * (float(y_next) - rls.xi_hat @ phi)
    P = rls.P - np.outer(gain, phi) @ rls.P
    P = 0.5 * (P + P.T)
    return RlsState(project_onto_polytope(xi, Xi, options), P)
