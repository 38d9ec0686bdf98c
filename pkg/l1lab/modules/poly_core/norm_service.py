"""
Norm service - controller norms and minimum-phase checks for other modules.
"""
from typing import Optional, Sequence

from l1lab.core.core_apis import CoreLoggerAPI

from .core.bounds import l1_norm_upper_over_polytope
from .core.cache import NormCache
from .core.impulse import controller_impulse_response, xi_impulse_response
from .core.polynomial import Polynomial, is_minimum_phase
from .core.types import ImpulseNorm, NormOptions
from .core.exceptions import NotMinimumPhase


class NormService:
    """
    Facade over the poly_core functions, bound to the ``norm`` settings.

    Caches handed out by ``new_cache`` are per run; the estimator and the
    adaptive controller of one run share a single cache.
    """

    def __init__(self, options: Optional[NormOptions] = None):
        self.options = options or NormOptions()
        self._logger: Optional[CoreLoggerAPI] = None

    def set_logger(self, logger: Optional[CoreLoggerAPI]):
        self._logger = logger

    def new_cache(self, n: int, max_size: int = 4096) -> NormCache:
        return NormCache(n, self.options, max_size=max_size)

    def impulse(self, a, b) -> ImpulseNorm:
        return controller_impulse_response(a, b, options=self.options)

    def xi_impulse(self, xi: Sequence[float], n: int) -> ImpulseNorm:
        return xi_impulse_response(xi, n, self.options)

    def norm(self, xi: Sequence[float], n: int) -> float:
        return self.xi_impulse(xi, n).l1_norm

    def is_minimum_phase(self, b) -> bool:
        return is_minimum_phase(b, self.options.stability_margin)

    def xi_is_admissible(self, xi: Sequence[float], n: int) -> bool:
        """True iff the b part of ξ is minimum phase with b_1 ≠ 0."""
        _, b = Polynomial.from_xi(xi, n)
        try:
            return self.is_minimum_phase(b)
        except NotMinimumPhase:
            return False

    def upper_over_polytope(self, Xi, n: int, method="vertex_sampling", samples: int = 256,
                            seed: int = 0, extra_candidates=None) -> float:
        value = l1_norm_upper_over_polytope(Xi, n, method, samples, seed=seed,
                                            extra_candidates=extra_candidates, options=self.options)
        if self._logger:
            self._logger.log(f"Sampled G_u={value:.6g} over {samples} candidates ({method})",
                             level="INFO", tag="norm")
        return value
