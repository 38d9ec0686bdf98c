"""
Model-verification diagnostics on recorded data.

A parameter estimate is unfalsified on a data window when every residual
|â(q⁻¹)y_{k+1} − b̂(q⁻¹)u_k| fits inside δ̂^w + δ̂^y p^y_{k+1} + δ̂^u p^u_{k+1}.
Any ξ̂ passes once δ̂^w is as large as its largest residual, which is why the
true parameters cannot be identified from data alone.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from l1lab.modules.plant_sim import History, PlantParams, PlantState, regressor, window_max

from .exceptions import EstimatorError
from .estimator import EstimatorState
from .types import FalsificationStatus, UpdateEntry

# relative slack for residual comparisons
_RTOL = 1e-12


@dataclass(frozen=True)
class DataWindow:
    """
    Snapshot of recorded inputs and outputs for k = start..end.

    Each k contributes the residual of y_{k+1} given φ_k.
    """
    state: PlantState
    start: int
    end: int

    @classmethod
    def from_state(cls, state: PlantState, start: int = 0, end: Optional[int] = None) -> "DataWindow":
        """Copy the histories of a plant state; ``end`` defaults to the last complete step."""
        end = state.t - 1 if end is None else end
        if end > state.t - 1 or start > end:
            raise EstimatorError(f"Window [{start}, {end}] outside recorded steps 0..{state.t - 1}")
        y = History(origin=state.y.origin, initial=state.y.values())
        u = History(origin=state.u.origin, initial=state.u.values())
        return cls(PlantState(n=state.n, m=state.m, y=y, u=u, t=state.t), start, end)

    @property
    def steps(self) -> range:
        return range(self.start, self.end + 1)

    def residuals(self, xi_hat: Sequence[float]) -> np.ndarray:
        """y_{k+1} − φ_k·ξ̂ for every k in the window."""
        xi_hat = np.asarray(xi_hat, dtype=float)
        return np.array([self.state.y[k + 1] - float(regressor(self.state, k) @ xi_hat) for k in self.steps])

    def levels(self, mu: int) -> Tuple[np.ndarray, np.ndarray]:
        """(p^y_{k+1}, p^u_{k+1}) over [k+1−μ, k] for every k in the window."""
        p_y = np.array([window_max(self.state.y, k + 1 - mu, k) for k in self.steps])
        p_u = np.array([window_max(self.state.u, k + 1 - mu, k) for k in self.steps])
        return p_y, p_u


def max_residual(xi_hat: Sequence[float], window: DataWindow) -> float:
    """Largest |y_{k+1} − φ_k·ξ̂| over the window."""
    return float(np.max(np.abs(window.residuals(xi_hat))))


def membership_diagnostic(theta_hat: PlantParams, window: DataWindow) -> bool:
    """True iff θ̂ is unfalsified by every step of the window."""
    residuals = np.abs(window.residuals(theta_hat.xi))
    p_y, p_u = window.levels(theta_hat.mu)
    bound = theta_hat.delta_w + theta_hat.delta_y * p_y + theta_hat.delta_u * p_u
    return bool(np.all(residuals <= bound * (1.0 + _RTOL) + _RTOL))


def falsification_check(state_or_criterion: Union[EstimatorState, float], J_star: float) -> FalsificationStatus:
    """
    FALSIFIED iff I(ζ_t) exceeds the designer cap J_*.

    Raises:
        EstimatorError: J_* not positive
    """
    if J_star is None or J_star <= 0.0:
        raise EstimatorError(f"J_star must be positive, got {J_star}")
    criterion = getattr(state_or_criterion, "criterion", state_or_criterion)
    return FalsificationStatus.FALSIFIED if criterion > J_star else FalsificationStatus.OK


def packing_violations(update_log: Sequence[UpdateEntry]) -> List[Tuple[int, int]]:
    """
    Pairs (i, j), i < j, of logged estimates closer than half a dead zone.

    Estimate i was superseded at update i+1 because it lay more than the
    dead zone ε_{i+1} away from the new halfspace, which every later
    estimate satisfies; so |ζ_j − ζ_i| > ε_{i+1} must hold.
    """
    violations = []
    for i in range(len(update_log) - 1):
        threshold = 0.5 * update_log[i + 1].eps
        for j in range(i + 1, len(update_log)):
            if np.linalg.norm(update_log[j].zeta - update_log[i].zeta) <= threshold:
                violations.append((i, j))
    return violations


def criterion_nondecreasing(update_log: Sequence[UpdateEntry], tol: float = 1e-9) -> bool:
    """I(ζ) never decreases along the logged updates."""
    values = [entry.criterion for entry in update_log]
    return all(b >= a - tol * (1.0 + abs(a)) for a, b in zip(values, values[1:]))
