"""
Set Estimator Module - set-membership estimation of (xi, delta_w, delta).

Provides:
- build_regressor / dead_zone_violated
- update: halfspace intersection and linear-fractional re-estimation
- adaptive_eps: the adaptive dead-zone schedule
- diagnostics: membership, falsification and packing checks
"""

from .module import SetEstimatorModule
from .estimator_service import EstimatorService
from .core.regressor import build_regressor, dead_zone_violated, oracle_satisfies, sign
from .core.estimator import (
    EstimatorState,
    SetMembershipEstimator,
    initial_polyhedron,
    update,
    adaptive_eps,
    steady_state_bound,
    convergence_constant,
    controller_norm
)
from .core.diagnostics import (
    DataWindow,
    max_residual,
    membership_diagnostic,
    falsification_check,
    packing_violations,
    criterion_nondecreasing
)
from .core.types import (
    G_UPPER_SAMPLED,
    Criterion,
    EpsMode,
    EstimateVector,
    EstimatorConfig,
    FalsificationStatus,
    FalsifiedPolicy,
    RegressorRecord,
    ScheduleParams,
    StepOutcome,
    UpdateEntry
)
from .core.exceptions import EstimatorError, Falsified, ScheduleUndefined

__version__ = "0.1.0"

__all__ = [
    # Module
    "SetEstimatorModule",
    # Service
    "EstimatorService",
    # Algorithm
    "build_regressor",
    "dead_zone_violated",
    "oracle_satisfies",
    "sign",
    "EstimatorState",
    "SetMembershipEstimator",
    "initial_polyhedron",
    "update",
    "adaptive_eps",
    "steady_state_bound",
    "convergence_constant",
    "controller_norm",
    # Diagnostics
    "DataWindow",
    "max_residual",
    "membership_diagnostic",
    "falsification_check",
    "packing_violations",
    "criterion_nondecreasing",
    # Types
    "G_UPPER_SAMPLED",
    "Criterion",
    "EpsMode",
    "EstimateVector",
    "EstimatorConfig",
    "FalsificationStatus",
    "FalsifiedPolicy",
    "RegressorRecord",
    "ScheduleParams",
    "StepOutcome",
    "UpdateEntry",
    # Exceptions
    "EstimatorError",
    "Falsified",
    "ScheduleUndefined",
]
