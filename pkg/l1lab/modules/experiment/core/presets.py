"""
The reference closed-loop study as a preset.
"""
from typing import Optional

from l1lab.core.exceptions import ConfigurationError
from l1lab.core.settings_default import get_default_settings
from l1lab.modules.controllers import ControllerKind

from .config import ExperimentConfig
from .runner import RunServices, RunSummary, run

DISTURBANCE_ALIASES = {
    "random": "random_uniform",
    "random_uniform": "random_uniform",
    "trig": "deterministic_trig",
    "deterministic_trig": "deterministic_trig",
}


def s7_config(kind: str = "random", controller="adaptive_optimal", seed: int = 0,
              horizon: int = 2000, worst_case: bool = True, **overrides) -> ExperimentConfig:
    """
    Reference study: the unstable fourth-order plant, gains (1, 0.2, 0.02),
    μ = 20, μ̄ = 40, ε = 0.001, ξ_0 = (0, 0, 0, 0, 1, 0, 0) and the
    worst-case windows [801, 810], [1201, 1210] over the chosen base kind.

    Args:
        kind: Base disturbance, ``random`` or ``trig``
        controller: ``adaptive_optimal``, ``rls_baseline`` or ``optimal_known`` (short forms accepted)
        seed: Experiment seed
        horizon: Number of steps
        worst_case: Apply the worst-case windows
        **overrides: Top-level ``experiment`` keys to replace
    """
    base = DISTURBANCE_ALIASES.get(kind)
    if base is None:
        raise ConfigurationError(f"Unknown disturbance kind for the reference study: {kind!r}")
    settings = get_default_settings()
    data = settings["experiment"]
    data["seed"] = seed
    data["horizon"] = horizon
    data["controller"]["kind"] = ControllerKind.parse(controller).value
    data["disturbance"]["base_kind"] = base
    data["disturbance"]["kind"] = "worst_case_sign" if worst_case else base
    data.update(overrides)
    return ExperimentConfig.from_dict(
        data,
        output=settings["output"],
        norm=settings["norm"],
        solver=settings["solver"],
        projection=settings["projection"],
    )


def replicate_s7(kind: str = "random", controller="adaptive_optimal", seed: int = 0,
                 horizon: int = 2000, services: Optional[RunServices] = None,
                 logger=None) -> RunSummary:
    """Run the reference study for one seed and return its summary."""
    config = s7_config(kind, controller, seed, horizon)
    return run(config, services=services, logger=logger).summary
