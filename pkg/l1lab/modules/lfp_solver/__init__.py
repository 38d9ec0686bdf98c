"""
LFP Solver Module - linear and linear-fractional programming.

Provides:
- Polyhedron: immutable H-representation {z : A z >= c}
- lp_minimize: dense two-phase simplex with Bland's rule
- lfp_minimize: Charnes-Cooper reduction of a ratio objective to an LP,
  checked by Dinkelbach steps on the original polyhedron
"""

from .module import LfpSolverModule
from .lp_service import LpService
from .core.polyhedron import Polyhedron
from .core.simplex import lp_minimize
from .core.fractional import lfp_minimize, charnes_cooper
from .core.types import AffineFunctional, LpSolution, LpStatus, SolverOptions
from .core.exceptions import (
    SolverError,
    EmptyPolytope,
    IterationLimit,
    DenominatorNotPositive,
    NumericalInstability
)

__version__ = "0.1.0"

__all__ = [
    # Module
    "LfpSolverModule",
    # Service
    "LpService",
    # Functions
    "lp_minimize",
    "lfp_minimize",
    "charnes_cooper",
    # Types
    "Polyhedron",
    "AffineFunctional",
    "LpSolution",
    "LpStatus",
    "SolverOptions",
    # Exceptions
    "SolverError",
    "EmptyPolytope",
    "IterationLimit",
    "DenominatorNotPositive",
    "NumericalInstability",
]
