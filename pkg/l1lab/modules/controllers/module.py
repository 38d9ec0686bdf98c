"""
Controllers Module - optimal, adaptive and RLS control laws.
"""
from typing import Optional

from l1lab.core.interfaces import IModule

from .controller_service import ControllerFactory
from .core.projection import ProjectionOptions


class ControllersModule(IModule):
    """
    Publishes a ControllerFactory as ``controller_service``.

    Requires ``norm_service`` and ``estimator_service``.
    """

    name = "controllers"
    provides = ["controller_service"]

    def __init__(self):
        self._factory: Optional[ControllerFactory] = None

    async def load(self, context):
        config = context.services.get("core_config")
        projection = ProjectionOptions.from_dict(config.get("projection") if config else None)
        self._factory = ControllerFactory(
            context.services.require("norm_service"),
            context.services.require("estimator_service"),
            projection,
        )
        self._factory.set_logger(context.services.get("core_logger"))
        context.services.set("controller_service", self._factory)

    async def start(self, context):
        pass
