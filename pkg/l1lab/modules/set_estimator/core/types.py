"""
Type definitions for the set_estimator module.
"""
from dataclasses import dataclass, fields
from enum import Enum
from typing import Any, Dict, Optional, Union

import numpy as np

from .exceptions import ScheduleUndefined


class EpsMode(Enum):
    """Dead-zone policy."""
    FIXED = "fixed"
    ADAPTIVE = "adaptive"


class Criterion(Enum):
    """
    Estimated control criterion.

    RATIO is δ̂^w/(1 − δ̂); DELTA is δ̂ alone, for plants known to have no
    external disturbance.
    """
    RATIO = "ratio"
    DELTA = "delta"


# g_upper value that asks for ‖G^ξ‖ maximized over sampled vertices of Ξ
G_UPPER_SAMPLED = "sampled"


class FalsifiedPolicy(Enum):
    HALT = "halt"
    WIDEN = "widen"


class FalsificationStatus(Enum):
    OK = "ok"
    FALSIFIED = "falsified"


@dataclass(frozen=True, eq=False)
class EstimateVector:
    """ζ = (ξ̂, δ̂^w, δ̂)."""
    xi_hat: np.ndarray
    delta_w_hat: float = 0.0
    delta_hat: float = 0.0

    def __post_init__(self):
        xi = np.array(self.xi_hat, dtype=float).reshape(-1)
        xi.setflags(write=False)
        object.__setattr__(self, "xi_hat", xi)
        object.__setattr__(self, "delta_w_hat", float(self.delta_w_hat))
        object.__setattr__(self, "delta_hat", float(self.delta_hat))

    @classmethod
    def from_array(cls, z) -> "EstimateVector":
        z = np.asarray(z, dtype=float)
        return cls(z[:-2], max(z[-2], 0.0), max(z[-1], 0.0))

    def as_array(self) -> np.ndarray:
        return np.concatenate((self.xi_hat, [self.delta_w_hat, self.delta_hat]))

    @property
    def dim(self) -> int:
        return self.xi_hat.size + 2

    def criterion(self, kind: Criterion = Criterion.RATIO) -> float:
        """I(ζ)."""
        if kind is Criterion.DELTA:
            return self.delta_hat
        return self.delta_w_hat / (1.0 - self.delta_hat)

    def to_dict(self) -> Dict[str, Any]:
        return {"xi_hat": self.xi_hat.tolist(), "delta_w_hat": self.delta_w_hat, "delta_hat": self.delta_hat}


@dataclass
class ScheduleParams:
    """Constants of the adaptive dead zone."""
    E: float = 0.1
    kappa: float = 1.1
    varkappa: float = 0.95
    delta_bar: float = 0.9
    eps_floor: float = 1e-8

    def validate(self):
        """
        Raises:
            ScheduleUndefined: δ̄ ≥ ϰ, ϰ ≥ 1, κ ≤ 1 or E ≤ 0
        """
        if not 0.0 <= self.delta_bar < self.varkappa < 1.0:
            raise ScheduleUndefined(
                f"Need 0 <= delta_bar < varkappa < 1, got delta_bar={self.delta_bar}, varkappa={self.varkappa}"
            )
        if self.kappa <= 1.0:
            raise ScheduleUndefined(f"Need kappa > 1, got {self.kappa}")
        if self.E <= 0.0:
            raise ScheduleUndefined(f"Need E > 0, got {self.E}")


@dataclass
class EstimatorConfig:
    """Estimator settings, the ``experiment.estimator`` section plus μ̄."""
    eps_mode: EpsMode = EpsMode.FIXED
    eps: float = 0.001
    g_upper: Optional[Union[float, str]] = None
    g_upper_samples: int = 256
    delta_bar: float = 0.9
    E: float = 0.1
    kappa: float = 1.1
    varkappa: float = 0.95
    eps_floor: float = 1e-8
    criterion: Criterion = Criterion.RATIO
    on_falsified: FalsifiedPolicy = FalsifiedPolicy.HALT
    max_widenings: int = 8
    mu_bar: int = 40

    def __post_init__(self):
        self.eps_mode = EpsMode(self.eps_mode)
        self.criterion = Criterion(self.criterion)
        self.on_falsified = FalsifiedPolicy(self.on_falsified)
        if isinstance(self.g_upper, str):
            if self.g_upper != G_UPPER_SAMPLED:
                raise ScheduleUndefined(f"g_upper must be a number or '{G_UPPER_SAMPLED}', got {self.g_upper!r}")
        elif self.g_upper is not None:
            self.g_upper = float(self.g_upper)

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]], mu_bar: Optional[int] = None) -> "EstimatorConfig":
        known = {f.name for f in fields(cls)}
        values = {k: v for k, v in (data or {}).items() if k in known}
        if mu_bar is not None:
            values["mu_bar"] = mu_bar
        return cls(**values)

    @property
    def schedule(self) -> ScheduleParams:
        return ScheduleParams(self.E, self.kappa, self.varkappa, self.delta_bar, self.eps_floor)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eps_mode": self.eps_mode.value,
            "eps": self.eps,
            "g_upper": self.g_upper,
            "g_upper_samples": self.g_upper_samples,
            "delta_bar": self.delta_bar,
            "E": self.E,
            "kappa": self.kappa,
            "varkappa": self.varkappa,
            "eps_floor": self.eps_floor,
            "criterion": self.criterion.value,
            "on_falsified": self.on_falsified.value,
            "max_widenings": self.max_widenings,
            "mu_bar": self.mu_bar,
        }


@dataclass(frozen=True, eq=False)
class RegressorRecord:
    """Data inequality ψ·ζ ≥ ν produced by the measurement y_{t+1}."""
    t: int
    phi: np.ndarray
    eta: float
    psi: np.ndarray
    nu: float
    p_next: float


@dataclass
class UpdateEntry:
    """One estimate change: the time, the new ζ, the ε in force and I(ζ)."""
    t: int
    zeta: np.ndarray
    eps: float
    criterion: float


@dataclass
class StepOutcome:
    """Estimation half of one algorithm step."""
    record: RegressorRecord
    violated: bool
    updated: bool
    eps: float
    criterion: float
    zeta: EstimateVector
    widenings: int = 0
