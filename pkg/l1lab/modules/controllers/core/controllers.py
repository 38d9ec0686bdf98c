"""
Controller strategies for the closed-loop run.

Every controller exposes ``control(state)`` for the input u_t and
``observe(state)`` for the estimation half of the step once y_{t+1} has
been appended to the plant state.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Sequence

import numpy as np

from l1lab.modules.lfp_solver import Polyhedron
from l1lab.modules.plant_sim import PlantState, regressor, window_max
from l1lab.modules.set_estimator import SetMembershipEstimator, StepOutcome

from .exceptions import ControllerError
from .laws import control_adaptive, control_optimal
from .projection import ProjectionOptions
from .rls import RlsState, rls_step


class ControllerKind(Enum):
    OPTIMAL_KNOWN = "optimal_known"
    ADAPTIVE_OPTIMAL = "adaptive_optimal"
    RLS_BASELINE = "rls_baseline"

    @classmethod
    def parse(cls, value) -> "ControllerKind":
        if isinstance(value, cls):
            return value
        aliases = {"adaptive": cls.ADAPTIVE_OPTIMAL, "rls": cls.RLS_BASELINE, "optimal": cls.OPTIMAL_KNOWN}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise ControllerError(f"Unknown controller kind: {value!r}") from None


@dataclass
class ControlDecision:
    u: float
    cut: bool = False
    bound: Optional[float] = None


@dataclass
class ControllerSpec:
    """
    Which controller to build and its per-kind settings.

    ``xi0`` is the initial estimate of the adaptive and RLS controllers;
    ``rls_p0`` scales the initial RLS covariance P_0 = rls_p0·I.
    """
    kind: ControllerKind = ControllerKind.ADAPTIVE_OPTIMAL
    xi0: Optional[Sequence[float]] = None
    rls_p0: float = 0.001

    def __post_init__(self):
        self.kind = ControllerKind.parse(self.kind)
        if self.xi0 is not None:
            self.xi0 = [float(x) for x in self.xi0]
        if self.rls_p0 <= 0.0:
            raise ControllerError(f"rls_p0 must be positive, got {self.rls_p0}")

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "ControllerSpec":
        data = data or {}
        return cls(
            kind=data.get("kind", cls.kind),
            xi0=data.get("xi0"),
            rls_p0=float(data.get("rls_p0", 0.001)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "xi0": self.xi0, "rls_p0": self.rls_p0}


class Controller(ABC):
    """Common interface of the control laws."""

    kind: ControllerKind

    @abstractmethod
    def control(self, state: PlantState) -> ControlDecision:
        """Input u_t for the plant state at time t."""

    def observe(self, state: PlantState) -> Optional[StepOutcome]:
        """Learn from y_{t+1}; the default controller learns nothing."""
        return None

    @property
    @abstractmethod
    def xi_hat(self) -> np.ndarray:
        """Parameter vector the control law currently uses."""


class OptimalKnownController(Controller):
    """The optimal law with the true ξ."""

    kind = ControllerKind.OPTIMAL_KNOWN

    def __init__(self, xi: Sequence[float]):
        self._xi = np.array(xi, dtype=float)

    @property
    def xi_hat(self) -> np.ndarray:
        return self._xi

    def control(self, state: PlantState) -> ControlDecision:
        return ControlDecision(control_optimal(self._xi, state))


class AdaptiveOptimalController(Controller):
    """
    Certainty-equivalence optimal control with cutting.

    The estimator is owned by the controller; ‖G^{ξ̂_t}‖ for the cut comes
    from the estimator's norm cache so both use the same value.
    """

    kind = ControllerKind.ADAPTIVE_OPTIMAL

    def __init__(self, estimator: SetMembershipEstimator, mu: int, mu_bar: int):
        if mu_bar < 2 * mu:
            raise ControllerError(f"mu_bar={mu_bar} must be at least 2*mu={2 * mu}")
        self.estimator = estimator
        self.mu = mu
        self.mu_bar = mu_bar

    @property
    def xi_hat(self) -> np.ndarray:
        return self.estimator.xi_hat

    def control(self, state: PlantState) -> ControlDecision:
        est = self.estimator.state
        u, cut = control_adaptive(est, state, self.mu, self.mu_bar)
        bound = est.g_norm * window_max(state.y, state.t + self.mu - self.mu_bar, state.t)
        return ControlDecision(u, cut, bound)

    def observe(self, state: PlantState) -> StepOutcome:
        return self.estimator.observe(state)


class RlsController(Controller):
    """Optimal law on the projected RLS estimate."""

    kind = ControllerKind.RLS_BASELINE

    def __init__(self, Xi: Polyhedron, xi0: Sequence[float], p0: float = 0.001,
                 projection: Optional[ProjectionOptions] = None):
        self.Xi = Xi
        self.projection = projection or ProjectionOptions()
        self.rls = RlsState.initial(xi0, p0)

    @property
    def xi_hat(self) -> np.ndarray:
        return self.rls.xi_hat

    def control(self, state: PlantState) -> ControlDecision:
        return ControlDecision(control_optimal(self.rls.xi_hat, state))

    def observe(self, state: PlantState) -> None:
        t = state.t - 1
        phi = regressor(state, t)
        self.rls = rls_step(self.rls, phi, state.y[state.t], self.Xi, self.projection)
        return None
