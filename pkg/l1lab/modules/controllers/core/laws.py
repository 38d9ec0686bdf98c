"""
Control laws.
"""
from typing import Sequence, Tuple

import numpy as np

from l1lab.modules.plant_sim import PlantState, window_max


def control_optimal(xi: Sequence[float], state: PlantState) -> float:
    """
    u_t from b(q⁻¹)u_t = (a(q⁻¹) − 1)y_{t+1}.

    u_t = (a_1 y_t + ... + a_n y_{t+1−n} − b_2 u_{t−1} − ... − b_m u_{t+1−m})/b_1.
    With the true ξ the closed loop gives y_{t+1} = v_{t+1}.
    """
    xi = np.asarray(xi, dtype=float)
    n, m, t = state.n, state.m, state.t
    a, b = xi[:n], xi[n:]
    y_recent = state.y.window(t - n + 1, t)[::-1]
    u_recent = state.u.window(t - m + 1, t - 1)[::-1]
    return float((a @ y_recent - b[1:] @ u_recent) / b[0])


def clamp_control(u: float, g_norm: float, y_level: float) -> Tuple[float, bool]:
    """Limit |u| to ‖G‖·y_level keeping the sign; returns (u, cut)."""
    bound = g_norm * y_level
    if abs(u) > bound:
        return float(np.copysign(bound, u)), True
    return float(u), False


def control_adaptive(est, state: PlantState, mu: int, mu_bar: int) -> Tuple[float, bool]:
    """
    Certainty-equivalence control with cutting.

    The optimal law runs on ξ̂_t; the input is cut to
    ‖G^{ξ̂_t}‖·max |y| over [t+μ−μ̄, t] when it exceeds that level.

    Args:
        est: EstimatorState (uses its estimate and cached controller norm)
        state: Plant state at time t
        mu: Perturbation memory μ
        mu_bar: Estimator window μ̄ ≥ 2μ
    """
    u = control_optimal(est.zeta.xi_hat, state)
    y_level = window_max(state.y, state.t + mu - mu_bar, state.t)
    return clamp_control(u, est.g_norm, y_level)
