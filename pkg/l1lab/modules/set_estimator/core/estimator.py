"""
Dead-zone set-membership estimation.

The estimator keeps a polyhedron Z_t of unfalsified ζ = (ξ̂, δ̂^w, δ̂) and a
point estimate ζ_t minimizing I(ζ) = δ̂^w/(1 − δ̂) over it. A measurement
whose data inequality ψ·ζ ≥ ν is violated by more than the dead zone
ε|ψ| adds that halfspace to Z and re-solves the fractional program.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from l1lab.core.core_apis import CoreLoggerAPI
from l1lab.modules.poly_core import NormCache, PolynomialError, l1_norm_upper_over_polytope
from l1lab.modules.lfp_solver import (
    Polyhedron, LpStatus, LpSolution, SolverOptions, lfp_minimize, lp_minimize
)
from l1lab.modules.plant_sim import PlantState

from .exceptions import EstimatorError, Falsified, ScheduleUndefined
from .regressor import build_regressor, dead_zone_violated
from .types import (
    G_UPPER_SAMPLED, Criterion, EpsMode, EstimateVector, EstimatorConfig, FalsifiedPolicy,
    RegressorRecord, ScheduleParams, StepOutcome, UpdateEntry
)


@dataclass
class EstimatorState:
    """Polyhedral and point estimate with the dead-zone bookkeeping."""
    Z: Polyhedron
    zeta: EstimateVector
    eps: float
    mode: EpsMode
    schedule: ScheduleParams
    g_norm_cache: NormCache
    delta_bar_row: int
    criterion_kind: Criterion = Criterion.RATIO
    update_count: int = 0
    widenings: int = 0
    update_log: List[UpdateEntry] = field(default_factory=list)

    @property
    def delta_bar(self) -> float:
        return self.schedule.delta_bar

    @property
    def criterion(self) -> float:
        """I(ζ_t)."""
        return self.zeta.criterion(self.criterion_kind)

    @property
    def g_norm(self) -> float:
        """‖G^{ξ̂_t}‖."""
        return controller_norm(self.g_norm_cache, self.zeta.xi_hat)


def controller_norm(cache: NormCache, xi: Sequence[float]) -> float:
    """‖G^ξ‖ from the cache, or inf when the series cannot be certified."""
    try:
        return cache.norm(xi)
    except PolynomialError:
        return float("inf")


def initial_polyhedron(Xi: Polyhedron, delta_bar: float) -> Tuple[Polyhedron, int]:
    """
    Z_0 = Ξ × {δ̂^w ≥ 0} × {0 ≤ δ̂ ≤ δ̄}.

    Returns:
        (Z_0, index of the −δ̂ ≥ −δ̄ row)
    """
    if not 0.0 <= delta_bar < 1.0:
        raise ScheduleUndefined(f"delta_bar must lie in [0, 1), got {delta_bar}")
    d = Xi.dim + 2
    Z = Xi.embed(d, 0)
    unit = np.eye(d)
    Z = Z.intersect(unit[d - 2], 0.0)
    Z = Z.intersect(unit[d - 1], 0.0)
    Z = Z.intersect(-unit[d - 1], -delta_bar)
    return Z, Z.n_rows - 1


def steady_state_bound(zeta: EstimateVector, eps: float, g_norm: float) -> float:
    """I(ζ^ε) = (δ̂^w + ε)/(1 − δ̂ − ε(2 + ‖G‖)); inf when the denominator is not positive."""
    den = 1.0 - zeta.delta_hat - eps * (2.0 + g_norm)
    return (zeta.delta_w_hat + eps) / den if den > 0.0 else float("inf")


def convergence_constant(zeta: EstimateVector, eps: float, g_norm: float) -> float:
    """K_ζ = (1 + δ̂^w(2 + ‖G‖))/(1 − δ̂ − ε(2 + ‖G‖))²; inf when the denominator is not positive."""
    den = 1.0 - zeta.delta_hat - eps * (2.0 + g_norm)
    return (1.0 + zeta.delta_w_hat * (2.0 + g_norm)) / den ** 2 if den > 0.0 else float("inf")


def adaptive_eps(state: EstimatorState) -> float:
    """
    Dead zone ε_t for the current estimate.

    With I(ζ_t) = 0: (1 − δ̂)E/(1 + E(2 + ‖G‖)). Otherwise the smaller of
    (ϰ − δ̄)/(2 + ‖G‖) and (κ − 1)I(ζ_t)/K_{ζ_t}, where K is evaluated with
    the previous ε. The result never drops below ``eps_floor``.

    Raises:
        ScheduleUndefined: invalid schedule constants
    """
    s = state.schedule
    s.validate()
    g = state.g_norm
    if not np.isfinite(g):
        return s.eps_floor

    zeta = state.zeta
    criterion = state.criterion
    if criterion == 0.0:
        eps = (1.0 - zeta.delta_hat) * s.E / (1.0 + s.E * (2.0 + g))
    else:
        first = (s.varkappa - s.delta_bar) / (2.0 + g)
        K = convergence_constant(zeta, state.eps, g)
        eps = first if not np.isfinite(K) else min(first, (s.kappa - 1.0) * criterion / K)
    return max(eps, s.eps_floor)


def _solve(Z: Polyhedron, kind: Criterion, options: Optional[SolverOptions]) -> LpSolution:
    d = Z.dim
    unit = np.eye(d)
    if kind is Criterion.DELTA:
        return lp_minimize(unit[d - 1], Z, options=options)
    return lfp_minimize((unit[d - 2], 0.0), (-unit[d - 1], 1.0), Z, options)


def update(
    state: EstimatorState,
    rec: RegressorRecord,
    options: Optional[SolverOptions] = None,
    policy: FalsifiedPolicy = FalsifiedPolicy.HALT,
    max_widenings: int = 8
) -> EstimatorState:
    """
    Z ← Z ∩ {ψ·ζ ≥ ν}; ζ ← argmin I over Z.

    With the WIDEN policy an empty Z is retried with δ̄ ← (1 + δ̄)/2, at most
    ``max_widenings`` times per run.

    Raises:
        Falsified: Z is empty
    """
    Z = state.Z.intersect(rec.psi, rec.nu)
    while True:
        solution = _solve(Z, state.criterion_kind, options)
        if solution.status is LpStatus.OPTIMAL:
            break
        if solution.status is not LpStatus.INFEASIBLE:
            raise EstimatorError(f"Estimation program {solution.status.value} at t={rec.t}")
        if policy is not FalsifiedPolicy.WIDEN or state.widenings >= max_widenings:
            raise Falsified(f"Data at t={rec.t} contradict the parameter set", t=rec.t)
        widened = 0.5 * (1.0 + state.schedule.delta_bar)
        state.schedule.delta_bar = widened
        if state.schedule.varkappa <= widened:
            state.schedule.varkappa = 0.5 * (1.0 + widened)
        state.widenings += 1
        Z = Z.with_rhs(state.delta_bar_row, -widened)

    state.Z = Z
    state.zeta = EstimateVector.from_array(solution.point)
    state.update_count += 1
    state.update_log.append(UpdateEntry(rec.t, state.zeta.as_array(), state.eps, state.criterion))
    return state


class SetMembershipEstimator:
    """
    Stateful estimator for one run.

    ``observe`` performs the estimation half of an algorithm step: build
    the regressor, test the dead zone, update if needed and refresh ε.
    """

    def __init__(
        self,
        Xi: Polyhedron,
        n: int,
        xi0: Sequence[float],
        config: Optional[EstimatorConfig] = None,
        norm_cache: Optional[NormCache] = None,
        solver_options: Optional[SolverOptions] = None,
        logger: Optional[CoreLoggerAPI] = None
    ):
        self.config = config or EstimatorConfig()
        self.n = n
        self.solver_options = solver_options
        self._logger = logger
        cfg = self.config

        schedule = cfg.schedule
        norm_cache = norm_cache or NormCache(n)
        self.g_upper: Optional[float] = None
        if cfg.eps_mode is EpsMode.ADAPTIVE:
            schedule.validate()
        else:
            if cfg.eps <= 0.0:
                raise ScheduleUndefined(f"Fixed dead zone must be positive, got {cfg.eps}")
            self.g_upper = self._resolve_g_upper(Xi, n, norm_cache)
            if self.g_upper is not None and cfg.eps >= (1.0 - cfg.delta_bar) / (2.0 + self.g_upper):
                raise ScheduleUndefined(
                    f"eps={cfg.eps} must stay below (1 - delta_bar)/(2 + G_u) = "
                    f"{(1.0 - cfg.delta_bar) / (2.0 + self.g_upper):.6g}"
                )

        Z0, row = initial_polyhedron(Xi, cfg.delta_bar)
        zeta0 = EstimateVector(xi0, 0.0, 0.0)
        if zeta0.dim != Z0.dim:
            raise EstimatorError(f"ξ_0 has length {zeta0.xi_hat.size}, Ξ has dimension {Xi.dim}")
        if not Xi.contains(zeta0.xi_hat):
            raise EstimatorError("ξ_0 lies outside Ξ")

        self.Xi = Xi
        self.state = EstimatorState(
            Z=Z0,
            zeta=zeta0,
            eps=cfg.eps,
            mode=cfg.eps_mode,
            schedule=schedule,
            g_norm_cache=norm_cache,
            delta_bar_row=row,
            criterion_kind=cfg.criterion,
        )
        self.state.update_log.append(UpdateEntry(0, zeta0.as_array(), cfg.eps, self.state.criterion))
        if cfg.eps_mode is EpsMode.ADAPTIVE:
            self.state.eps = adaptive_eps(self.state)

    def _resolve_g_upper(self, Xi: Polyhedron, n: int, cache: NormCache) -> Optional[float]:
        """G_u as configured; 'sampled' takes the largest ‖G^ξ‖ over sampled vertices of Ξ."""
        g_upper = self.config.g_upper
        if g_upper != G_UPPER_SAMPLED:
            return g_upper
        g_upper = l1_norm_upper_over_polytope(Xi, n, samples=self.config.g_upper_samples,
                                              options=cache.options, solver_options=self.solver_options)
        if self._logger:
            self._logger.log(f"Sampled G_u={g_upper:.6g} over {self.config.g_upper_samples} candidates",
                             level="INFO", tag="estimator")
        return g_upper

    @property
    def zeta(self) -> EstimateVector:
        return self.state.zeta

    @property
    def xi_hat(self) -> np.ndarray:
        return self.state.zeta.xi_hat

    @property
    def eps(self) -> float:
        return self.state.eps

    @property
    def criterion(self) -> float:
        return self.state.criterion

    @property
    def update_count(self) -> int:
        return self.state.update_count

    @property
    def norm_cache(self) -> NormCache:
        return self.state.g_norm_cache

    def controller_norm(self) -> float:
        return self.state.g_norm

    def steady_bound(self) -> float:
        """I(ζ^ε) for the current estimate and dead zone."""
        return steady_state_bound(self.state.zeta, self.state.eps, self.state.g_norm)

    def convergence_constant(self) -> float:
        return convergence_constant(self.state.zeta, self.state.eps, self.state.g_norm)

    def observe(self, plant_state: PlantState, y_next: Optional[float] = None) -> StepOutcome:
        """
        Process y_{t+1}; the plant state must already hold it.

        Raises:
            Falsified: the data contradict Z_0 (after any allowed widening)
        """
        state = self.state
        rec = build_regressor(plant_state, y_next, state.zeta, self.config.mu_bar)
        violated = dead_zone_violated(rec, state.zeta, state.eps)
        widenings_before = state.widenings

        if violated:
            update(state, rec, self.solver_options, self.config.on_falsified, self.config.max_widenings)
            if state.widenings > widenings_before and self._logger:
                self._logger.log(f"t={rec.t} widened delta_bar={state.delta_bar:.6g} "
                                 f"widenings={state.widenings}", level="WARNING", tag="falsified")
            if self._logger:
                self._logger.log(f"t={rec.t} update={state.update_count} I={state.criterion:.6g} "
                                 f"eps={state.eps:.3g} rows={state.Z.n_rows}", level="INFO", tag="estimator")

        if state.mode is EpsMode.ADAPTIVE:
            state.eps = adaptive_eps(state)

        return StepOutcome(
            record=rec,
            violated=violated,
            updated=violated,
            eps=state.eps,
            criterion=state.criterion,
            zeta=state.zeta,
            widenings=state.widenings - widenings_before,
        )
