"""
Poly Core Module - polynomials, stability test and controller norms.
"""
from typing import Optional

from l1lab.core.interfaces import IModule

from .norm_service import NormService
from .core.types import NormOptions


class PolyCoreModule(IModule):
    """
    Publishes a NormService as ``norm_service``.
    """

    name = "poly_core"
    provides = ["norm_service"]

    def __init__(self):
        self._service: Optional[NormService] = None
        self._logger = None

    async def load(self, context):
        self._logger = context.services.get("core_logger")
        config = context.services.get("core_config")
        options = NormOptions.from_dict(config.get("norm") if config else None)

        self._service = NormService(options)
        self._service.set_logger(self._logger)
        context.services.set("norm_service", self._service)

        if self._logger:
            self._logger.log(f"NormService ready (tol={options.tol}, max_len={options.max_len})",
                             level="DEBUG", tag="norm")

    async def start(self, context):
        pass
