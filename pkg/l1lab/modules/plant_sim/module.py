"""
Plant Sim Module - the plant, its histories and the disturbance generators.
"""
from typing import Optional

from l1lab.core.interfaces import IModule

from .plant_service import PlantService


class PlantSimModule(IModule):
    """
    Publishes a PlantService as ``plant_service``.
    """

    name = "plant_sim"
    provides = ["plant_service"]

    def __init__(self):
        self._service: Optional[PlantService] = None

    async def load(self, context):
        logger = context.services.get("core_logger")
        config = context.services.get("core_config")
        horizon = (config.get("experiment.horizon") if config else None) or 4096

        self._service = PlantService(capacity=int(horizon) + 64)
        self._service.set_logger(logger)
        context.services.set("plant_service", self._service)

    async def start(self, context):
        pass
