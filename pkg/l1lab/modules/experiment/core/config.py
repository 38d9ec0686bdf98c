"""
Typed experiment configuration.

Built from the ``experiment`` settings section (plus ``norm``, ``solver``,
``projection`` and ``output``) and validated once, so the run loop never
sees an inconsistent setup.
"""
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from l1lab.core.core_apis import CoreConfigAPI
from l1lab.core.exceptions import ConfigurationError, NumericalError
from l1lab.modules.controllers import ControllerKind, ControllerSpec, ProjectionOptions
from l1lab.modules.lfp_solver import Polyhedron, SolverOptions
from l1lab.modules.plant_sim import DisturbanceSpec, PlantParams
from l1lab.modules.poly_core import NormOptions
from l1lab.modules.set_estimator import EpsMode, EstimatorConfig


def s7_polytope() -> Polyhedron:
    """
    Ξ of the reference study (n = 4, m = 3).

    |a_i| ≤ 20, |b_j| ≤ 10, b_1 ≥ 0.1, b_1 − b_3 ≥ 0.01,
    b_1 − b_2 + b_3 ≥ 0.01, b_1 + b_2 + b_3 ≥ 0.01.
    """
    Xi = Polyhedron.box([-20.0] * 4 + [-10.0] * 3, [20.0] * 4 + [10.0] * 3)
    rows = [
        ([0, 0, 0, 0, 1, 0, 0], 0.1),
        ([0, 0, 0, 0, 1, 0, -1], 0.01),
        ([0, 0, 0, 0, 1, -1, 1], 0.01),
        ([0, 0, 0, 0, 1, 1, 1], 0.01),
    ]
    for psi, nu in rows:
        Xi = Xi.intersect(psi, nu)
    return Xi


POLYTOPE_PRESETS = {"s7": s7_polytope}


def polytope_from_dict(data: Optional[Dict[str, Any]], dim: int) -> Polyhedron:
    """
    Ξ from settings.

    Accepts ``{"preset": name}``, ``{"lower": [...], "upper": [...]}`` and/or
    ``{"A": [[...]], "c": [...]}``; box and rows combine.
    """
    data = data or {"preset": "s7"}
    if "preset" in data:
        builder = POLYTOPE_PRESETS.get(data["preset"])
        if builder is None:
            raise ConfigurationError(f"Unknown polytope preset: {data['preset']!r}")
        Xi = builder()
    elif "lower" in data or "upper" in data:
        Xi = Polyhedron.box(data.get("lower", [-np.inf] * dim), data.get("upper", [np.inf] * dim))
    else:
        Xi = Polyhedron.whole_space(dim)

    if "A" in data:
        Xi = Xi.meet(Polyhedron(data["A"], data["c"]))
    if Xi.dim != dim:
        raise ConfigurationError(f"Parameter polytope has dimension {Xi.dim}, plant has {dim} coefficients")
    finite = np.isfinite(Xi.c)
    if not finite.any():
        raise ConfigurationError("Parameter polytope needs at least one finite constraint")
    return Polyhedron(Xi.A[finite], Xi.c[finite])


@dataclass
class OutputPaths:
    """Output directory and artefact names."""
    dir: Optional[str] = None
    trace: str = "trace.csv"
    summary: str = "summary.json"
    updates: str = "updates.csv"
    disturbance: str = "disturbance.csv"
    summaries: str = "summaries.json"

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "OutputPaths":
        data = data or {}
        return cls(
            dir=data.get("dir"),
            trace=data.get("trace", "trace.csv"),
            summary=data.get("summary", "summary.json"),
            updates=data.get("updates", "updates.csv"),
            disturbance=data.get("disturbance", "disturbance.csv"),
            summaries=data.get("summaries", "summaries.json"),
        )


@dataclass
class ExperimentConfig:
    """Everything one closed-loop run needs."""
    plant: PlantParams
    Xi: Polyhedron
    controller: ControllerSpec = field(default_factory=ControllerSpec)
    disturbance: DisturbanceSpec = field(default_factory=DisturbanceSpec)
    estimator: EstimatorConfig = field(default_factory=EstimatorConfig)
    horizon: int = 2000
    mu_bar: int = 40
    J_star: Optional[float] = None
    seed: int = 0
    initial_y: Optional[List[float]] = None
    steady_fraction: float = 0.25
    certify_true_bound: bool = True
    output: OutputPaths = field(default_factory=OutputPaths)
    norm: NormOptions = field(default_factory=NormOptions)
    solver: SolverOptions = field(default_factory=SolverOptions)
    projection: ProjectionOptions = field(default_factory=ProjectionOptions)

    def __post_init__(self):
        self.estimator.mu_bar = self.mu_bar
        self.validate()

    def validate(self):
        """
        Raises:
            ConfigurationError: inconsistent settings
        """
        plant = self.plant
        if self.horizon < 1:
            raise ConfigurationError(f"horizon must be at least 1, got {self.horizon}")
        if self.mu_bar < 2 * plant.mu:
            raise ConfigurationError(f"mu_bar={self.mu_bar} must be at least 2*mu={2 * plant.mu}")
        if self.estimator.eps_mode is EpsMode.FIXED and self.estimator.eps <= 0.0:
            raise ConfigurationError(f"Fixed dead zone must be positive, got {self.estimator.eps}")
        if not 0.0 < self.steady_fraction <= 1.0:
            raise ConfigurationError(f"steady_fraction must lie in (0, 1], got {self.steady_fraction}")
        if self.J_star is not None and self.J_star <= 0.0:
            raise ConfigurationError(f"J_star must be positive, got {self.J_star}")
        if self.Xi.dim != plant.xi.size:
            raise ConfigurationError(f"Parameter polytope has dimension {self.Xi.dim}, ξ has {plant.xi.size}")
        if self.initial_y is not None and len(self.initial_y) != plant.n:
            raise ConfigurationError(f"initial_y needs {plant.n} values, got {len(self.initial_y)}")
        if self.controller.kind is not ControllerKind.OPTIMAL_KNOWN:
            xi0 = self.controller.xi0
            if xi0 is None or len(xi0) != plant.xi.size:
                raise ConfigurationError(f"controller.xi0 must have {plant.xi.size} entries")
            if not self.Xi.contains(xi0):
                raise ConfigurationError("controller.xi0 lies outside the parameter polytope")

    @property
    def steady_start(self) -> int:
        """First time index of the steady-state window."""
        return self.horizon - max(1, int(round(self.steady_fraction * self.horizon))) + 1

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, Any],
        output: Optional[Dict[str, Any]] = None,
        norm: Optional[Dict[str, Any]] = None,
        solver: Optional[Dict[str, Any]] = None,
        projection: Optional[Dict[str, Any]] = None
    ) -> "ExperimentConfig":
        """
        Raises:
            ConfigurationError: missing keys or invalid values
        """
        try:
            plant_data = dict(data["plant"])
            seed = int(data.get("seed", 0))
            mu_bar = int(data.get("mu_bar", 2 * int(plant_data.get("mu", 20))))
            plant = PlantParams(
                xi=plant_data["xi"],
                n=int(plant_data["n"]),
                delta_w=float(plant_data.get("delta_w", 1.0)),
                delta_y=float(plant_data.get("delta_y", 0.2)),
                delta_u=float(plant_data.get("delta_u", 0.02)),
                mu=int(plant_data.get("mu", 20)),
            )
            disturbance = dict(data.get("disturbance") or {})
            disturbance["seed"] = seed
            initial_y = data.get("initial_y")
            return cls(
                plant=plant,
                Xi=polytope_from_dict(data.get("xi_polytope"), plant.xi.size),
                controller=ControllerSpec.from_dict(data.get("controller")),
                disturbance=DisturbanceSpec.from_dict(disturbance, seed),
                estimator=EstimatorConfig.from_dict(data.get("estimator"), mu_bar),
                horizon=int(data.get("horizon", 2000)),
                mu_bar=mu_bar,
                J_star=data.get("J_star"),
                seed=seed,
                initial_y=[float(y) for y in initial_y] if initial_y is not None else None,
                steady_fraction=float(data.get("steady_fraction", 0.25)),
                certify_true_bound=bool(data.get("certify_true_bound", True)),
                output=OutputPaths.from_dict(output),
                norm=NormOptions.from_dict(norm),
                solver=SolverOptions.from_dict(solver),
                projection=ProjectionOptions.from_dict(projection),
            )
        except KeyError as e:
            raise ConfigurationError(f"Missing experiment setting: {e}") from e
        except (NumericalError, ValueError, TypeError) as e:
            raise ConfigurationError(f"Invalid experiment settings: {e}") from e

    @classmethod
    def from_settings(cls, config_api: CoreConfigAPI) -> "ExperimentConfig":
        """Typed config from the laboratory settings."""
        return cls.from_dict(
            config_api.get("experiment") or {},
            output=config_api.get("output"),
            norm=config_api.get("norm"),
            solver=config_api.get("solver"),
            projection=config_api.get("projection"),
        )

    @classmethod
    def from_plain(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        """Inverse of ``to_dict``."""
        return cls.from_dict(data, output=data.get("output"), norm=data.get("norm"),
                             solver=data.get("solver"), projection=data.get("projection"))

    def replace(self, **changes) -> "ExperimentConfig":
        """Copy with top-level experiment keys replaced, e.g. ``seed``."""
        data = self.to_dict()
        data.update(changes)
        return self.from_plain(data)

    def to_dict(self) -> Dict[str, Any]:
        """Plain-data form; ``from_dict`` of its pieces rebuilds the config."""
        disturbance = self.disturbance.to_dict()
        if self.disturbance.sequence is not None:
            disturbance["sequence"] = list(self.disturbance.sequence)
        estimator = self.estimator.to_dict()
        estimator.pop("mu_bar", None)
        return {
            "plant": self.plant.to_dict(),
            "xi_polytope": self.Xi.to_dict(),
            "controller": self.controller.to_dict(),
            "disturbance": disturbance,
            "estimator": estimator,
            "horizon": self.horizon,
            "mu_bar": self.mu_bar,
            "J_star": self.J_star,
            "seed": self.seed,
            "initial_y": self.initial_y,
            "steady_fraction": self.steady_fraction,
            "certify_true_bound": self.certify_true_bound,
            "output": asdict(self.output),
            "norm": asdict(self.norm),
            "solver": asdict(self.solver),
            "projection": asdict(self.projection),
        }

