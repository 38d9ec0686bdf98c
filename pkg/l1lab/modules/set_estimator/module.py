"""
Set Estimator Module - dead-zone set-membership estimation.
"""
from typing import Optional

from l1lab.core.interfaces import IModule

from .estimator_service import EstimatorService


class SetEstimatorModule(IModule):
    """
    Publishes an EstimatorService as ``estimator_service``.

    Requires ``norm_service`` and ``lp_service``.
    """

    name = "set_estimator"
    provides = ["estimator_service"]

    def __init__(self):
        self._service: Optional[EstimatorService] = None

    async def load(self, context):
        logger = context.services.get("core_logger")
        self._service = EstimatorService(
            context.services.require("norm_service"),
            context.services.require("lp_service"),
        )
        self._service.set_logger(logger)
        context.services.set("estimator_service", self._service)

    async def start(self, context):
        pass
