from l1lab.core.hook_types import LabHook
from l1lab.core.interfaces import IModule


class UpdateMonitorModule(IModule):
    """
    Application module that follows a run through the simulation hooks.

    Logs every estimate update and cut, and counts them for the report
    printed on shutdown.
    """

    def __init__(self):
        self.logger = None
        self.updates = 0
        self.cuts = 0

    async def load(self, context):
        self.logger = context.services.get("core_logger")

    async def start(self, context):
        """
        Register the simulation hooks on the laboratory.

        Args:
            context: The module context containing services and configuration.
        """
        lab = context.get_lab()
        lab.register_hook(LabHook.ON_ESTIMATE_UPDATED, self._on_update)
        lab.register_hook(LabHook.ON_CONTROL_CUT, self._on_cut)
        lab.register_hook(LabHook.ON_RUN_END, self._on_end)

    def _on_update(self, t, outcome):
        self.updates += 1
        self.logger.log(f"t={t} update #{self.updates} I={outcome.criterion:.4f} eps={outcome.eps:.2e}",
                        level="DEBUG", tag="monitor")

    def _on_cut(self, t, decision):
        self.cuts += 1
        self.logger.log(f"t={t} input cut to {decision.u:.4f}", level="WARNING", tag="monitor")

    def _on_end(self, summary):
        self.logger.log(f"{summary.steps} steps, {self.updates} updates, {self.cuts} cuts",
                        level="INFO", tag="monitor")

    async def stop(self, context):
        pass
