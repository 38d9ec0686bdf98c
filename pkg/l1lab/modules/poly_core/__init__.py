"""
Poly Core Module - polynomial arithmetic and controller norms.

Provides:
- Polynomial with ascending coefficients in the delay variable
- Schur-Cohn (Jury) stability margin and minimum-phase test
- Impulse response and l1 norm of the optimal controller
- NormCache shared by the estimator and the adaptive controller
"""

from .module import PolyCoreModule
from .norm_service import NormService
from .core.polynomial import Polynomial, jury_margin, is_minimum_phase, smallest_root_modulus
from .core.impulse import controller_impulse_response, xi_impulse_response, xi_norm, decay_rate_for
from .core.cache import NormCache
from .core.bounds import l1_norm_upper_over_polytope, controller_gain_check
from .core.types import ImpulseNorm, NormOptions, NormSearch
from .core.exceptions import PolynomialError, NotMinimumPhase, NonConvergent

__version__ = "0.1.0"

__all__ = [
    # Module
    "PolyCoreModule",
    # Service
    "NormService",
    # Polynomials
    "Polynomial",
    "jury_margin",
    "is_minimum_phase",
    "smallest_root_modulus",
    # Norms
    "controller_impulse_response",
    "xi_impulse_response",
    "xi_norm",
    "decay_rate_for",
    "NormCache",
    "l1_norm_upper_over_polytope",
    "controller_gain_check",
    # Types
    "ImpulseNorm",
    "NormOptions",
    "NormSearch",
    # Exceptions
    "PolynomialError",
    "NotMinimumPhase",
    "NonConvergent",
]
