"""
Type definitions for the poly_core module.
"""
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np


class NormSearch(Enum):
    """Candidate generation for the ℓ1-norm search over a polytope."""
    VERTEX_SAMPLING = "vertex_sampling"
    RANDOM_LP_DIRECTIONS = "random_lp_directions"


@dataclass
class NormOptions:
    """Truncation and tail-bound settings for the controller impulse response."""
    tol: float = 1e-9
    abs_floor: float = 1e-12
    max_len: int = 100_000
    safety_factor: float = 2.0
    fit_window: int = 10
    decay_margin: float = 0.05
    decay_rate: Optional[float] = None
    stability_margin: float = 1e-9
    block_size: int = 256

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "NormOptions":
        """Build options from the ``norm`` settings section, ignoring unknown keys."""
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in (data or {}).items() if k in known})


@dataclass
class ImpulseNorm:
    """
    Truncated impulse response of the optimal controller and its ℓ1 norm.

    The true norm lies in ``[l1_norm, l1_norm + tail_bound]``.
    """
    coefficients: np.ndarray
    l1_norm: float
    tail_bound: float
    truncation_length: int
    decay_rate: Optional[float] = field(default=None)

    @property
    def upper(self) -> float:
        return self.l1_norm + self.tail_bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "l1_norm": self.l1_norm,
            "tail_bound": self.tail_bound,
            "truncation_length": self.truncation_length,
            "decay_rate": self.decay_rate,
        }
