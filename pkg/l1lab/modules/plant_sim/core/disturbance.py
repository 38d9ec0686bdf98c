"""
Total disturbance generators.

v_{t+1} = δ^w w_{t+1} + δ^y δ¹ p^y_{t+1} + δ^u δ² p^u_{t+1}, where p^y_{t+1} and
p^u_{t+1} are the largest |y|, |u| over [t+1−μ, t]. Every kind stays inside
the envelope |v_{t+1}| ≤ δ^w + δ^y p^y_{t+1} + δ^u p^u_{t+1}.
"""
import csv
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .exceptions import PlantError, MissingAux, EnvelopeViolation, SequenceExhausted
from .plant import PlantParams, PlantState, window_max
from .rng import DisturbanceStream

# relative slack of the envelope assertion
_ENVELOPE_RTOL = 1e-12


class DisturbanceKind(Enum):
    """Disturbance families."""
    RANDOM_UNIFORM = "random_uniform"
    DETERMINISTIC_TRIG = "deterministic_trig"
    WORST_CASE_SIGN = "worst_case_sign"
    CUSTOM_SEQUENCE = "custom_sequence"


class DisturbanceAux(NamedTuple):
    """Current estimate and regressor, needed by the worst-case kind."""
    xi_hat: np.ndarray
    phi: np.ndarray


@dataclass(frozen=True)
class DisturbanceSpec:
    """
    Disturbance configuration.

    ``windows`` are inclusive [start, end] ranges of t+1 on which the
    worst-case kind overrides ``base_kind``.
    """
    kind: DisturbanceKind = DisturbanceKind.RANDOM_UNIFORM
    seed: int = 0
    base_kind: DisturbanceKind = DisturbanceKind.RANDOM_UNIFORM
    windows: Tuple[Tuple[int, int], ...] = ((801, 810), (1201, 1210))
    trig_frequency: float = 5.0
    sequence_path: Optional[str] = None
    sequence: Optional[Tuple[float, ...]] = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", DisturbanceKind(self.kind))
        object.__setattr__(self, "base_kind", DisturbanceKind(self.base_kind))
        object.__setattr__(self, "windows", tuple((int(s), int(e)) for s, e in self.windows))
        if self.base_kind is DisturbanceKind.WORST_CASE_SIGN:
            raise PlantError("The worst-case disturbance needs a different base kind")
        if self.sequence is not None:
            object.__setattr__(self, "sequence", tuple(float(v) for v in self.sequence))

    @classmethod
    def from_dict(cls, data: Dict[str, Any], seed: int = 0) -> "DisturbanceSpec":
        return cls(
            kind=data.get("kind", "random_uniform"),
            seed=int(data.get("seed", seed)),
            base_kind=data.get("base_kind", "random_uniform"),
            windows=data.get("windows", ((801, 810), (1201, 1210))),
            trig_frequency=float(data.get("trig_frequency", 5.0)),
            sequence_path=data.get("sequence_path"),
            sequence=data.get("sequence"),
        )

    def in_window(self, t_next: int) -> bool:
        return any(start <= t_next <= end for start, end in self.windows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "seed": self.seed,
            "base_kind": self.base_kind.value,
            "windows": [list(w) for w in self.windows],
            "trig_frequency": self.trig_frequency,
            "sequence_path": self.sequence_path,
        }


@lru_cache(maxsize=16)
def read_sequence(path: str) -> Tuple[float, ...]:
    """
    Read the ``v`` column of a CSV file; entry k is v_{k+1}.

    Raises:
        PlantError: missing file or column
    """
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames is None or "v" not in reader.fieldnames:
                raise PlantError(f"{path}: no 'v' column")
            return tuple(float(row["v"]) for row in reader)
    except OSError as e:
        raise PlantError(f"{path}: {e}") from e


def write_sequence(path: str, values: Sequence[float]):
    """Write a disturbance series in the format read by ``read_sequence``."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["v"])
        for value in values:
            writer.writerow([repr(float(value))])
    read_sequence.cache_clear()


def perturbation_levels(state: PlantState, params: PlantParams, u_t: float) -> Tuple[float, float]:
    """(p^y_{t+1}, p^u_{t+1}) over the window [t+1−μ, t]; u_t is not stored yet."""
    t = state.t
    p_y = window_max(state.y, t + 1 - params.mu, t)
    p_u = max(window_max(state.u, t + 1 - params.mu, t - 1), abs(float(u_t)))
    return p_y, p_u


def disturbance_envelope(state: PlantState, params: PlantParams, u_t: float) -> float:
    """δ^w + δ^y p^y_{t+1} + δ^u p^u_{t+1}."""
    p_y, p_u = perturbation_levels(state, params, u_t)
    return params.delta_w + params.delta_y * p_y + params.delta_u * p_u


def _sign(x: float) -> float:
    return 1.0 if x >= 0.0 else -1.0


def gen_disturbance(
    spec: DisturbanceSpec,
    state: PlantState,
    params: PlantParams,
    u_t: float,
    aux: Optional[DisturbanceAux] = None,
    stream: Optional[DisturbanceStream] = None
) -> float:
    """
    v_{t+1} for the current state and the input u_t about to be applied.

    Args:
        spec: Disturbance configuration
        state: Plant state at time t
        params: True plant parameters (gains and memory)
        u_t: Input applied at time t
        aux: Estimate ξ̂_t and regressor φ_t (worst-case kind)
        stream: Draw source; built from spec.seed when omitted

    Raises:
        MissingAux: worst-case kind without aux
        SequenceExhausted: custom sequence shorter than the run
        EnvelopeViolation: generated value outside the envelope
    """
    t_next = state.t + 1
    stream = stream or DisturbanceStream.from_seed(spec.seed)
    w, d1, d2 = stream.draws(t_next)

    if spec.kind is DisturbanceKind.CUSTOM_SEQUENCE:
        sequence = spec.sequence
        if sequence is None:
            if spec.sequence_path is None:
                raise PlantError("custom_sequence needs a sequence or a sequence_path")
            sequence = read_sequence(spec.sequence_path)
        if state.t >= len(sequence):
            raise SequenceExhausted(f"Sequence of length {len(sequence)} has no v_{t_next}")
        return float(sequence[state.t])

    p_y, p_u = perturbation_levels(state, params, u_t)
    envelope = params.delta_w + params.delta_y * p_y + params.delta_u * p_u

    kind = spec.kind
    if kind is DisturbanceKind.WORST_CASE_SIGN:
        if aux is None:
            raise MissingAux("worst_case_sign needs the estimate ξ̂_t and regressor φ_t")
        if spec.in_window(t_next):
            return envelope * _sign(float(np.dot(aux.xi_hat, aux.phi)))
        kind = spec.base_kind

    if kind is DisturbanceKind.DETERMINISTIC_TRIG:
        d1 = np.cos(spec.trig_frequency * t_next)
        d2 = np.sin(spec.trig_frequency * t_next)

    v = params.delta_w * w + params.delta_y * d1 * p_y + params.delta_u * d2 * p_u
    if abs(v) > envelope * (1.0 + _ENVELOPE_RTOL):
        raise EnvelopeViolation(f"|v_{t_next}| = {abs(v):.6g} exceeds envelope {envelope:.6g}")
    return float(v)


class DisturbanceGenerator:
    """
    Per-run disturbance source.

    Holds the draw stream and the loaded custom sequence and remembers the
    last envelope for the run loop's bookkeeping.
    """

    def __init__(self, spec: DisturbanceSpec, stream: Optional[DisturbanceStream] = None):
        if spec.kind is DisturbanceKind.CUSTOM_SEQUENCE and spec.sequence is None:
            if spec.sequence_path is None:
                raise PlantError("custom_sequence needs a sequence or a sequence_path")
            spec = DisturbanceSpec(
                kind=spec.kind, seed=spec.seed, base_kind=spec.base_kind, windows=spec.windows,
                trig_frequency=spec.trig_frequency, sequence_path=spec.sequence_path,
                sequence=read_sequence(spec.sequence_path),
            )
        self.spec = spec
        self.stream = stream or DisturbanceStream.from_seed(spec.seed)
        self.last_envelope: Optional[float] = None
        self.emitted: List[float] = []

    def next(self, state: PlantState, params: PlantParams, u_t: float,
             aux: Optional[DisturbanceAux] = None) -> float:
        self.last_envelope = disturbance_envelope(state, params, u_t)
        v = gen_disturbance(self.spec, state, params, u_t, aux, self.stream)
        self.emitted.append(v)
        return v
