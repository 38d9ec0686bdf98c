"""
Regressor and dead-zone test.

After y_{t+1} is measured the estimator forms

    φ_t = (−y_t, …, −y_{t−n+1}, u_t, …, u_{t−m+1}),
    η = sign(y_{t+1} − φ_t·ξ̂),   p_{t+1} = max |y| over [t+1−μ̄, t],
    ψ = (ηφ_t, 1, p_{t+1}),       ν = η y_{t+1},

and the data inequality ψ·ζ ≥ ν.
"""
from typing import Optional

import numpy as np

from l1lab.modules.plant_sim import PlantState, regressor, window_max

from .types import EstimateVector, RegressorRecord


def sign(x: float) -> float:
    """Sign with sign(0) = +1."""
    return 1.0 if x >= 0.0 else -1.0


def build_regressor(state: PlantState, y_next: Optional[float], zeta: EstimateVector,
                    mu_bar: int) -> RegressorRecord:
    """
    Data inequality for the measurement y_{t+1}.

    The plant state must already hold u_t and y_{t+1}, i.e. ``state.t``
    is t+1. ``y_next`` defaults to the stored y_{t+1}.
    """
    t = state.t - 1
    if y_next is None:
        y_next = state.y[t + 1]
    phi = regressor(state, t)
    eta = sign(float(y_next) - float(phi @ zeta.xi_hat))
    p_next = window_max(state.y, t + 1 - mu_bar, t)
    psi = np.concatenate((eta * phi, [1.0, p_next]))
    return RegressorRecord(t=t + 1, phi=phi, eta=eta, psi=psi, nu=eta * float(y_next), p_next=p_next)


def dead_zone_violated(rec: RegressorRecord, zeta: EstimateVector, eps: float) -> bool:
    """ψ·ζ < ν − ε|ψ| with the Euclidean norm."""
    return float(rec.psi @ zeta.as_array()) < rec.nu - eps * float(np.linalg.norm(rec.psi))


def oracle_satisfies(rec: RegressorRecord, zeta_bar) -> bool:
    """ψ·ζ̄ ≥ ν for a reference point ζ̄, with a 1e-9 relative slack."""
    z = zeta_bar.as_array() if isinstance(zeta_bar, EstimateVector) else np.asarray(zeta_bar, dtype=float)
    lhs = float(rec.psi @ z)
    return lhs >= rec.nu - 1e-9 * (1.0 + abs(rec.nu))
