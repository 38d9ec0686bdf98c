"""
Plant Sim Module - closed-loop plant simulation.

Provides:
- PlantParams / PlantState with absolute-time histories
- step and window_max
- disturbance generators with the bounded-envelope guarantee
- seeded Philox streams shared by every controller for a given seed
"""

from .module import PlantSimModule
from .plant_service import PlantService
from .core.history import History
from .core.plant import PlantParams, PlantState, step, window_max, regressor, OVERFLOW_LIMIT
from .core.disturbance import (
    DisturbanceKind,
    DisturbanceSpec,
    DisturbanceAux,
    DisturbanceGenerator,
    gen_disturbance,
    disturbance_envelope,
    perturbation_levels,
    read_sequence,
    write_sequence
)
from .core.rng import DisturbanceStream, seeded_streams, random_initial_outputs
from .core.exceptions import (
    PlantError,
    NonFinite,
    MissingAux,
    EnvelopeViolation,
    SequenceExhausted
)

__version__ = "0.1.0"

__all__ = [
    # Module
    "PlantSimModule",
    # Service
    "PlantService",
    # Plant
    "History",
    "PlantParams",
    "PlantState",
    "step",
    "window_max",
    "regressor",
    "OVERFLOW_LIMIT",
    # Disturbance
    "DisturbanceKind",
    "DisturbanceSpec",
    "DisturbanceAux",
    "DisturbanceGenerator",
    "gen_disturbance",
    "disturbance_envelope",
    "perturbation_levels",
    "read_sequence",
    "write_sequence",
    "DisturbanceStream",
    "seeded_streams",
    "random_initial_outputs",
    # Exceptions
    "PlantError",
    "NonFinite",
    "MissingAux",
    "EnvelopeViolation",
    "SequenceExhausted",
]
