"""
The closed-loop run.

One step at time t: the controller computes u_t (cut if needed), the
disturbance generator produces v_{t+1}, the plant produces y_{t+1}, and
the controller observes it (dead-zone test, update, ε refresh for the
adaptive controller; the RLS step for the baseline). The run halts on
instability or falsification and still returns everything recorded so far.
"""
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from l1lab.core.core_apis import CoreLoggerAPI
from l1lab.core.hook_types import LabHook
from l1lab.core.hooks import HooksManager
from l1lab.modules.controllers import ControllerFactory
from l1lab.modules.lfp_solver import LpService
from l1lab.modules.plant_sim import (
    DisturbanceAux, NonFinite, PlantService, PlantState, regressor, step, window_max
)
from l1lab.modules.poly_core import NormService
from l1lab.modules.set_estimator import (
    EstimateVector, EstimatorService, Falsified, FalsificationStatus, UpdateEntry,
    falsification_check, oracle_satisfies, packing_violations
)

from .config import ExperimentConfig
from .metrics import RunStatus, Verdict, compute_J, oracle_delta, steady_max

TRACE_HEADER = ("t", "y", "u", "v", "p", "eta", "update", "cut", "eps", "I_zeta")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _json_number(value):
    if value is None:
        return None
    value = float(value)
    return value if np.isfinite(value) else None


@dataclass
class TraceRecord:
    """
    One step of a run, keyed by the measurement time t.

    ``u`` is the input u_{t−1} that produced y_t and ``v`` is v_t; ``p``,
    ``eta``, ``eps`` and ``I_zeta`` come from the estimator and stay empty
    for controllers without one.
    """
    t: int
    y: float
    u: float
    v: float
    p: float
    eta: Optional[float] = None
    update: bool = False
    cut: bool = False
    eps: Optional[float] = None
    I_zeta: Optional[float] = None
    zeta: Optional[np.ndarray] = None
    wall_time: float = 0.0

    def csv_row(self) -> List[str]:
        return [_cell(getattr(self, name)) for name in TRACE_HEADER]


@dataclass
class RunSummary:
    """Figures of one run; ``to_dict`` is the summary JSON."""
    controller: str
    disturbance: str
    seed: int
    horizon: int
    status: RunStatus = RunStatus.OK
    steps: int = 0
    J_theta: Optional[float] = None
    verdict: Optional[str] = None
    g_norm_true: Optional[float] = None
    I_final: Optional[float] = None
    update_count: int = 0
    cut_count: int = 0
    last_update_time: Optional[int] = None
    max_abs_y: float = 0.0
    max_abs_y_steady: float = 0.0
    steady_start: int = 0
    falsified: bool = False
    falsified_time: Optional[int] = None
    blowup_time: Optional[int] = None
    eps_final: Optional[float] = None
    K_final: Optional[float] = None
    steady_bound: Optional[float] = None
    widenings: int = 0
    identity_error: float = 0.0
    true_bound_violations: int = 0
    oracle_violations: int = 0
    packing_violations: int = 0
    runtime_seconds: float = 0.0

    @property
    def certified(self) -> bool:
        """
        Oracle membership held at every step, and so did the input bound with
        the true ξ; that bound is only counted when δ^u > 0.
        """
        return self.true_bound_violations == 0 and self.oracle_violations == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "controller": self.controller,
            "disturbance": self.disturbance,
            "seed": self.seed,
            "horizon": self.horizon,
            "status": self.status.value,
            "steps": self.steps,
            "J_theta": _json_number(self.J_theta),
            "verdict": self.verdict,
            "g_norm_true": _json_number(self.g_norm_true),
            "I_final": _json_number(self.I_final),
            "update_count": self.update_count,
            "cut_count": self.cut_count,
            "last_update_time": self.last_update_time,
            "max_abs_y": _json_number(self.max_abs_y),
            "max_abs_y_steady": _json_number(self.max_abs_y_steady),
            "steady_start": self.steady_start,
            "falsified": self.falsified,
            "falsified_time": self.falsified_time,
            "blowup_time": self.blowup_time,
            "eps_final": _json_number(self.eps_final),
            "K_final": _json_number(self.K_final),
            "steady_bound": _json_number(self.steady_bound),
            "widenings": self.widenings,
            "identity_error": _json_number(self.identity_error),
            "true_bound_violations": self.true_bound_violations,
            "oracle_violations": self.oracle_violations,
            "packing_violations": self.packing_violations,
            "runtime_seconds": round(self.runtime_seconds, 6),
        }


@dataclass
class RunResult:
    config: ExperimentConfig
    summary: RunSummary
    trace: List[TraceRecord] = field(default_factory=list)
    updates: List[UpdateEntry] = field(default_factory=list)
    disturbance: List[float] = field(default_factory=list)
    plant_state: Optional[PlantState] = None

    @property
    def y(self) -> np.ndarray:
        return np.array([r.y for r in self.trace])


@dataclass
class RunServices:
    """Per-run factories; the laboratory supplies its registered services."""
    plant: PlantService
    controllers: ControllerFactory
    norms: NormService

    @classmethod
    def standalone(cls, config: ExperimentConfig, logger: Optional[CoreLoggerAPI] = None) -> "RunServices":
        """Services built from the config alone, for use without a laboratory."""
        norms = NormService(config.norm)
        estimators = EstimatorService(norms, LpService(config.solver))
        estimators.set_logger(logger)
        controllers = ControllerFactory(norms, estimators, config.projection)
        controllers.set_logger(logger)
        plant = PlantService(capacity=config.horizon + 64)
        plant.set_logger(logger)
        return cls(plant=plant, controllers=controllers, norms=norms)


def run(
    config: ExperimentConfig,
    services: Optional[RunServices] = None,
    hooks: Optional[HooksManager] = None,
    logger: Optional[CoreLoggerAPI] = None
) -> RunResult:
    """
    Execute one closed-loop run.

    Deterministic in (config, seed). NonFinite and Falsified end the run
    early and are reported in the summary.

    Args:
        config: Validated experiment configuration
        services: Factories for plant, controller and norms
        hooks: Receives the simulation hooks through ``emit``
        logger: Run-level log lines (tag ``experiment``)
    """
    started = time.perf_counter()
    services = services or RunServices.standalone(config, logger)
    params = config.plant
    mu, mu_bar = params.mu, config.mu_bar

    def emit(hook: LabHook, *args):
        if hooks is not None:
            hooks.emit(hook, *args)

    true_norm = services.norms.xi_impulse(params.xi, params.n)
    J = compute_J(params, true_norm)
    g_true = true_norm.upper

    state, generator = services.plant.prepare(params, config.disturbance, config.seed, config.initial_y)
    controller = services.controllers.build(config.controller, config.Xi, params, config.estimator, mu_bar)
    estimator = getattr(controller, "estimator", None)

    oracle = None
    if config.certify_true_bound and estimator is not None:
        oracle = EstimateVector(params.xi, params.delta_w, oracle_delta(params, true_norm.l1_norm))

    summary = RunSummary(
        controller=controller.kind.value,
        disturbance=config.disturbance.kind.value,
        seed=config.seed,
        horizon=config.horizon,
        steady_start=config.steady_start,
        g_norm_true=true_norm.l1_norm,
    )
    if isinstance(J, Verdict):
        summary.verdict = J.value
    else:
        summary.J_theta = J

    emit(LabHook.ON_RUN_START, config)
    trace: List[TraceRecord] = []

    for t in range(config.horizon):
        step_started = time.perf_counter()
        decision = controller.control(state)
        u = decision.u
        if decision.cut:
            summary.cut_count += 1
            emit(LabHook.ON_CONTROL_CUT, t, decision)
        if config.certify_true_bound and params.delta_u > 0.0:
            level = window_max(state.y, t + mu - mu_bar, t)
            if abs(u) > g_true * level * (1.0 + 1e-9) + 1e-12:
                summary.true_bound_violations += 1

        aux = DisturbanceAux(controller.xi_hat, regressor(state, t, u))
        try:
            v = generator.next(state, params, u, aux)
            y_next = step(state, params, u, v)
        except NonFinite as e:
            summary.status = RunStatus.UNSTABLE
            summary.blowup_time = e.t
            if logger:
                logger.log(f"t={e.t} closed loop diverged", level="WARNING", tag="experiment")
            break
        summary.identity_error = max(summary.identity_error, abs(y_next - v))

        outcome = None
        try:
            outcome = controller.observe(state)
        except Falsified as e:
            summary.status = RunStatus.FALSIFIED
            summary.falsified_time = e.t
            emit(LabHook.ON_FALSIFIED, e.t, str(e))

        record = TraceRecord(t=t + 1, y=y_next, u=u, v=v, p=window_max(state.y, t + 1 - mu_bar, t),
                             cut=decision.cut)
        if outcome is not None:
            rec = outcome.record
            if oracle is not None and not oracle_satisfies(rec, oracle):
                summary.oracle_violations += 1
            record.p = rec.p_next
            record.eta = rec.eta
            record.update = outcome.updated
            record.eps = outcome.eps
            record.I_zeta = outcome.criterion
            if outcome.updated:
                record.zeta = outcome.zeta.as_array()
                emit(LabHook.ON_ESTIMATE_UPDATED, t + 1, outcome)
            if config.J_star is not None and \
                    falsification_check(outcome.criterion, config.J_star) is FalsificationStatus.FALSIFIED:
                summary.status = RunStatus.FALSIFIED
                summary.falsified_time = t + 1
                emit(LabHook.ON_FALSIFIED, t + 1, f"I={outcome.criterion:.6g} exceeds J_star={config.J_star}")
        record.wall_time = time.perf_counter() - step_started
        trace.append(record)

        if summary.status is RunStatus.FALSIFIED:
            if logger:
                logger.log(f"t={summary.falsified_time} model falsified", level="WARNING", tag="falsified")
            break

    ys = np.array([r.y for r in trace])
    summary.steps = len(trace)
    summary.falsified = summary.status is RunStatus.FALSIFIED
    summary.max_abs_y = float(np.max(np.abs(ys))) if ys.size else 0.0
    summary.max_abs_y_steady = steady_max(ys, config.steady_start - 1)

    updates: List[UpdateEntry] = []
    if estimator is not None:
        updates = list(estimator.state.update_log)
        summary.update_count = estimator.update_count
        summary.last_update_time = updates[-1].t if len(updates) > 1 else None
        summary.I_final = estimator.criterion
        summary.eps_final = estimator.eps
        summary.K_final = estimator.convergence_constant()
        summary.steady_bound = estimator.steady_bound()
        summary.widenings = estimator.state.widenings
        summary.packing_violations = len(packing_violations(updates))
    summary.runtime_seconds = time.perf_counter() - started

    if logger:
        J_text = f"{summary.J_theta:.4f}" if summary.J_theta is not None else summary.verdict
        I_text = f"{summary.I_final:.4f}" if summary.I_final is not None else "n/a"
        logger.log(f"seed={config.seed} controller={summary.controller} status={summary.status.value} "
                   f"steps={summary.steps} updates={summary.update_count} cuts={summary.cut_count} "
                   f"I={I_text} J={J_text} time={summary.runtime_seconds:.2f}s",
                   level="INFO", tag="experiment")
    emit(LabHook.ON_RUN_END, summary)

    return RunResult(config=config, summary=summary, trace=trace, updates=updates,
                     disturbance=list(generator.emitted), plant_state=state)
