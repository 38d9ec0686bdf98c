"""
The plant a(q⁻¹)y_{t+1} = b(q⁻¹)u_t + v_{t+1} and its state.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

import numpy as np

from l1lab.modules.poly_core import Polynomial, is_minimum_phase, NotMinimumPhase

from .exceptions import PlantError, NonFinite
from .history import History

# |y| above this counts as a blow-up
OVERFLOW_LIMIT = 1e150


@dataclass(frozen=True, eq=False)
class PlantParams:
    """θ = (ξ, δ^w, δ^y, δ^u) with the perturbation memory μ."""
    xi: np.ndarray
    n: int
    delta_w: float = 1.0
    delta_y: float = 0.2
    delta_u: float = 0.02
    mu: int = 20
    check_minimum_phase: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        xi = np.array(self.xi, dtype=float).reshape(-1)
        xi.setflags(write=False)
        object.__setattr__(self, "xi", xi)
        if self.n < 0 or xi.size <= self.n:
            raise PlantError(f"ξ of length {xi.size} has no b part for n={self.n}")
        if min(self.delta_w, self.delta_y, self.delta_u) < 0.0:
            raise PlantError("Disturbance gains must be nonnegative")
        if self.mu < 1:
            raise PlantError(f"Memory μ must be positive, got {self.mu}")
        if self.check_minimum_phase and not is_minimum_phase(xi[self.n:]):
            raise NotMinimumPhase(f"b = {xi[self.n:].tolist()} is not minimum phase")

    @property
    def m(self) -> int:
        return self.xi.size - self.n

    @property
    def a(self) -> Polynomial:
        return Polynomial.monic(self.xi[:self.n])

    @property
    def b(self) -> Polynomial:
        return Polynomial(self.xi[self.n:])

    def with_xi(self, xi: Sequence[float]) -> "PlantParams":
        return PlantParams(xi, self.n, self.delta_w, self.delta_y, self.delta_u, self.mu,
                           check_minimum_phase=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "xi": self.xi.tolist(),
            "n": self.n,
            "delta_w": self.delta_w,
            "delta_y": self.delta_y,
            "delta_u": self.delta_u,
            "mu": self.mu,
        }


@dataclass
class PlantState:
    """
    Output and input histories at the current time t.

    y is known up to y_t and u up to u_{t−1}; u_t is supplied to ``step``.
    """
    n: int
    m: int
    y: History
    u: History
    t: int = 0

    @classmethod
    def create(cls, n: int, m: int, y_init: Optional[Sequence[float]] = None,
               capacity: int = 4096) -> "PlantState":
        """
        Start at t = 0 with initial data y_{1−n}..y_0 (chronological).

        Missing initial data means zeros; inputs before t = 0 are zero.
        """
        if y_init is None:
            y_init = np.zeros(n)
        y_init = np.asarray(y_init, dtype=float).reshape(-1)
        if y_init.size != n:
            raise PlantError(f"Expected {n} initial outputs y_(1-n)..y_0, got {y_init.size}")
        if n == 0:
            y = History(origin=1, capacity=capacity)
        else:
            y = History(origin=1 - n, initial=y_init, capacity=capacity)
        return cls(n=n, m=m, y=y, u=History(origin=0, capacity=capacity), t=0)


def regressor(state: PlantState, t: Optional[int] = None, u_t: Optional[float] = None) -> np.ndarray:
    """
    φ_t = (−y_t, …, −y_{t−n+1}, u_t, …, u_{t−m+1}).

    ``u_t`` overrides the stored input at time t (needed before it is stored).
    """
    t = state.t if t is None else t
    y_part = -state.y.window(t - state.n + 1, t)[::-1]
    if u_t is None:
        u_part = state.u.window(t - state.m + 1, t)[::-1]
    else:
        u_part = np.concatenate(([u_t], state.u.window(t - state.m + 1, t - 1)[::-1]))
    return np.concatenate((y_part, u_part))


def window_max(history: History, start: int, end: int) -> float:
    """max |x_k| for k in [start, end]; indices before the origin count as 0."""
    values = history.window(start, end)
    return float(np.max(np.abs(values))) if values.size else 0.0


def step(state: PlantState, params: PlantParams, u_t: float, v_next: float) -> float:
    """
    Advance the plant by one step.

    Computes y_{t+1} = −Σ a_i y_{t+1−i} + Σ b_j u_{t+1−j} + v_{t+1}, appends
    u_t and y_{t+1}, and moves t forward.

    Raises:
        NonFinite: y_{t+1} overflows or an input is not finite
    """
    if not (np.isfinite(u_t) and np.isfinite(v_next)):
        raise NonFinite(f"Non-finite input at t={state.t} (u={u_t}, v={v_next})", t=state.t + 1)
    phi = regressor(state, state.t, u_t)
    with np.errstate(over="ignore", invalid="ignore"):
        y_next = float(phi @ params.xi) + float(v_next)
    if not np.isfinite(y_next) or abs(y_next) > OVERFLOW_LIMIT:
        raise NonFinite(f"Output overflow at t={state.t + 1}", t=state.t + 1)

    state.u.append(u_t)
    state.y.append(y_next)
    state.t += 1
    return y_next
