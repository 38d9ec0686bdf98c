"""
Estimator service - creates per-run set-membership estimators.
"""
from typing import Optional, Sequence

from l1lab.core.core_apis import CoreLoggerAPI
from l1lab.modules.lfp_solver import Polyhedron

from .core.estimator import SetMembershipEstimator
from .core.types import EstimatorConfig


class EstimatorService:
    """
    Builds estimators wired to the registry's norm and LP services.
    """

    def __init__(self, norm_service, lp_service):
        self.norm_service = norm_service
        self.lp_service = lp_service
        self._logger: Optional[CoreLoggerAPI] = None

    def set_logger(self, logger: Optional[CoreLoggerAPI]):
        self._logger = logger

    def create(self, Xi: Polyhedron, n: int, xi0: Sequence[float],
               config: Optional[EstimatorConfig] = None, norm_cache=None,
               verbose: bool = True) -> SetMembershipEstimator:
        """
        New estimator for one run.

        Args:
            Xi: A priori parameter polytope
            n: Degree of a
            xi0: Initial estimate ξ_0 ∈ Ξ
            config: Estimator settings
            norm_cache: Cache to share with the controller (new one if omitted)
            verbose: Log every update through the core logger
        """
        cache = norm_cache or self.norm_service.new_cache(n)
        return SetMembershipEstimator(
            Xi, n, xi0, config,
            norm_cache=cache,
            solver_options=self.lp_service.options,
            logger=self._logger if verbose else None,
        )
