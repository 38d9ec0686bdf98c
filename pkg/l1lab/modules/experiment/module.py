"""
Experiment Module - closed-loop runs for the command line and scripts.
"""
from typing import Optional

from l1lab.core.interfaces import IModule

from .core.runner import RunServices
from .experiment_service import ExperimentService


class ExperimentModule(IModule):
    """
    Publishes an ExperimentService as ``experiment_service``.

    Simulation hooks are emitted through the laboratory's hooks manager.
    """

    name = "experiment"
    provides = ["experiment_service"]

    def __init__(self):
        self._service: Optional[ExperimentService] = None

    async def load(self, context):
        services = context.services
        lab = context.get_lab()
        run_services = RunServices(
            plant=services.require("plant_service"),
            controllers=services.require("controller_service"),
            norms=services.require("norm_service"),
        )
        self._service = ExperimentService(
            services.get("core_config"),
            run_services,
            hooks=lab.hooks if lab is not None else None,
            path=services.get("core_path"),
        )
        context.services.set("experiment_service", self._service)

    async def start(self, context):
        # core_logger may have been replaced by a system module after load
        self._service.set_logger(context.services.get("core_logger"))
