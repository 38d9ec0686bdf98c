"""
Controller service - builds one controller per run.
"""
from typing import Optional

from l1lab.core.core_apis import CoreLoggerAPI
from l1lab.modules.lfp_solver import Polyhedron
from l1lab.modules.plant_sim import PlantParams
from l1lab.modules.set_estimator import EstimatorConfig

from .core.controllers import (
    AdaptiveOptimalController, Controller, ControllerKind, ControllerSpec,
    OptimalKnownController, RlsController
)
from .core.exceptions import ControllerError
from .core.projection import ProjectionOptions


class ControllerFactory:
    """
    Turns a ControllerSpec into a ready controller.

    The adaptive controller gets a fresh estimator from the estimator
    service, sharing the run's norm cache.
    """

    def __init__(self, norm_service, estimator_service, projection: Optional[ProjectionOptions] = None):
        self.norm_service = norm_service
        self.estimator_service = estimator_service
        self.projection = projection or ProjectionOptions()
        self._logger: Optional[CoreLoggerAPI] = None

    def set_logger(self, logger: Optional[CoreLoggerAPI]):
        self._logger = logger

    def build(self, spec: ControllerSpec, Xi: Polyhedron, params: PlantParams,
              estimator_config: Optional[EstimatorConfig] = None, mu_bar: Optional[int] = None,
              verbose: bool = True) -> Controller:
        """
        Args:
            spec: Controller kind and settings
            Xi: A priori parameter polytope
            params: True plant (ξ for the known-parameter law, n and μ otherwise)
            estimator_config: Settings of the adaptive controller's estimator
            mu_bar: Estimator window; defaults to 2μ
            verbose: Route estimator logs to the core logger
        """
        mu_bar = 2 * params.mu if mu_bar is None else mu_bar

        if spec.kind is ControllerKind.OPTIMAL_KNOWN:
            controller = OptimalKnownController(params.xi)
        else:
            if spec.xi0 is None:
                raise ControllerError(f"Controller '{spec.kind.value}' needs an initial estimate xi0")
            if len(spec.xi0) != params.xi.size:
                raise ControllerError(f"xi0 has length {len(spec.xi0)}, expected {params.xi.size}")
            if spec.kind is ControllerKind.ADAPTIVE_OPTIMAL:
                config = estimator_config or EstimatorConfig(mu_bar=mu_bar)
                cache = self.norm_service.new_cache(params.n)
                estimator = self.estimator_service.create(Xi, params.n, spec.xi0, config,
                                                          norm_cache=cache, verbose=verbose)
                controller = AdaptiveOptimalController(estimator, params.mu, mu_bar)
            else:
                controller = RlsController(Xi, spec.xi0, spec.rls_p0, self.projection)

        if self._logger and verbose:
            self._logger.log(f"Built {spec.kind.value} controller", level="DEBUG", tag="controller")
        return controller
