"""
Closed-loop performance figures.
"""
from enum import Enum
from typing import Sequence, Union

import numpy as np

from l1lab.modules.plant_sim import PlantParams
from l1lab.modules.poly_core import ImpulseNorm


class Verdict(Enum):
    """Outcome of ``compute_J`` when no controller can robustly stabilize."""
    ROBUSTLY_UNSTABILIZABLE = "robustly_unstabilizable"


class RunStatus(Enum):
    OK = "ok"
    FALSIFIED = "falsified"
    UNSTABLE = "unstable"


def compute_J(params: PlantParams, norm: Union[ImpulseNorm, float]) -> Union[float, Verdict]:
    """
    J(θ) = δ^w/(1 − δ^y − δ^u‖G^ξ‖).

    Returns Verdict.ROBUSTLY_UNSTABILIZABLE when δ^y + δ^u‖G^ξ‖ ≥ 1.
    """
    g = norm.l1_norm if isinstance(norm, ImpulseNorm) else float(norm)
    margin = params.delta_y + params.delta_u * g
    if margin >= 1.0:
        return Verdict.ROBUSTLY_UNSTABILIZABLE
    return params.delta_w / (1.0 - margin)


def oracle_delta(params: PlantParams, g_norm: float) -> float:
    """δ = δ^y + δ^u‖G^ξ‖ of the true plant."""
    return params.delta_y + params.delta_u * g_norm


def steady_max(values: Sequence[float], start_index: int) -> float:
    """max |x| over values[start_index:]; 0 for an empty tail."""
    tail = np.abs(np.asarray(values, dtype=float)[start_index:])
    return float(tail.max()) if tail.size else 0.0
