"""
Controllers Module - control laws for the closed-loop run.

Provides:
- control_optimal / control_adaptive
- rls_step with projection onto the parameter polytope
- project_onto_polytope (Dykstra)
- controller strategies and their factory
"""

from .module import ControllersModule
from .controller_service import ControllerFactory
from .core.laws import control_optimal, control_adaptive, clamp_control
from .core.projection import ProjectionOptions, project_onto_polytope
from .core.rls import RlsState, rls_step
from .core.controllers import (
    Controller,
    ControllerKind,
    ControllerSpec,
    ControlDecision,
    OptimalKnownController,
    AdaptiveOptimalController,
    RlsController
)
from .core.exceptions import ControllerError, ProjectionNotConverged

__version__ = "0.1.0"

__all__ = [
    # Module
    "ControllersModule",
    # Service
    "ControllerFactory",
    # Laws
    "control_optimal",
    "control_adaptive",
    "clamp_control",
    "ProjectionOptions",
    "project_onto_polytope",
    "RlsState",
    "rls_step",
    # Strategies
    "Controller",
    "ControllerKind",
    "ControllerSpec",
    "ControlDecision",
    "OptimalKnownController",
    "AdaptiveOptimalController",
    "RlsController",
    # Exceptions
    "ControllerError",
    "ProjectionNotConverged",
]
