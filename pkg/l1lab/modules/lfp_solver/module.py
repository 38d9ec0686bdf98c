"""
LFP Solver Module - dense LP and linear-fractional programming.
"""
from typing import Optional

from l1lab.core.interfaces import IModule

from .lp_service import LpService
from .core.types import SolverOptions


class LfpSolverModule(IModule):
    """
    Publishes an LpService as ``lp_service``.
    """

    name = "lfp_solver"
    provides = ["lp_service"]

    def __init__(self):
        self._service: Optional[LpService] = None
        self._logger = None

    async def load(self, context):
        self._logger = context.services.get("core_logger")
        config = context.services.get("core_config")
        options = SolverOptions.from_dict(config.get("solver") if config else None)

        self._service = LpService(options)
        self._service.set_logger(self._logger)
        context.services.set("lp_service", self._service)

        if self._logger:
            self._logger.log(f"LpService ready (pivot_tol={options.pivot_tol}, "
                             f"feasibility_tol={options.feasibility_tol})", level="DEBUG", tag="lp")

    async def start(self, context):
        pass

    async def stop(self, context):
        if self._service and self._logger:
            stats = self._service.stats
            self._logger.log(f"LP solves={stats['solves']} pivots={stats['pivots']}", level="DEBUG", tag="lp")
