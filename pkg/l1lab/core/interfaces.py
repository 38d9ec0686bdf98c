from abc import ABC
from typing import TYPE_CHECKING, Optional

from l1lab.core.registry import ModuleRegistry

if TYPE_CHECKING:
    from l1lab.core.app import Laboratory


class ModuleContext:
    """
    Context provided to all modules.

    Contains the service registry and a reference to the laboratory for
    registering hooks and background jobs.
    """

    def __init__(self):
        self._lab = None
        self.services = ModuleRegistry()
        self.metadata = {}

    def set_lab(self, lab: 'Laboratory'):
        self._lab = lab

    def get_lab(self) -> Optional['Laboratory']:
        return self._lab


class IModule(ABC):
    """
    Base interface for all modules.

    All lifecycle methods (load, start, ready, stop) are optional.
    Services are normally registered in ``load`` so that modules loaded
    later can resolve them in their own ``load``.
    """
    name: str = ""
    provides: list = []
    requires: list = []

    async def load(self, context: 'ModuleContext'):
        """
        Load the module and register its services.

        Args:
            context: The module context
        """
        pass

    async def start(self, context: 'ModuleContext'):
        pass

    async def ready(self, context: 'ModuleContext'):
        """
        Called after all modules have started.

        Args:
            context: The module context
        """
        pass

    async def stop(self, context: 'ModuleContext'):
        pass
