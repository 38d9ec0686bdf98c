import asyncio
from typing import Any, Awaitable, Callable, Dict, List, Optional

from l1lab.core.interfaces import IModule, ModuleContext
from l1lab.core.hook_types import LabHook
from l1lab.core.module_loader import ModuleLoader
from l1lab.core.api import initialize_core_services
from l1lab.core.log import print_banner, log_internal
from l1lab.core.hooks import HooksManager
from l1lab.core.stop import shutdown
from l1lab.core.registry import ModuleRegistry


class Laboratory:
    """
    Main laboratory class.

    Owns settings, logging, hooks and the module lifecycle. Jobs (single
    runs, batches, replications) are coroutines that receive the
    bootstrapped laboratory and use its services.

    Usage::

        async with Laboratory(settings_path="experiment.json") as lab:
            experiment = lab.services.require("experiment_service")
            result = await experiment.run_async()
    """

    def __init__(
        self,
        initial_settings: Optional[dict] = None,
        settings_path: Optional[str] = None,
        app_dir: Optional[str] = None,
        strict_settings: bool = False
    ):
        """
        Initialize the laboratory.

        Args:
            initial_settings: Code settings (highest priority)
            settings_path: Path to a JSON experiment file
            app_dir: Experiment directory (output paths resolve against it)
            strict_settings: Fail on a missing or malformed settings file
        """
        self.context = ModuleContext()
        self.modules: Dict[str, IModule] = {}
        self._module_names: List[str] = []
        self._background_tasks: List[asyncio.Task] = []
        self._stop_event: Optional[asyncio.Event] = None
        self._bootstrapped = False

        self._logger_api_ref = [None]
        self._config_api_ref = [None]

        logger_api, config_api, self.path = initialize_core_services(
            self.context.services,
            initial_settings,
            settings_path,
            app_dir,
            strict=strict_settings
        )
        self._logger_api_ref[0] = logger_api
        self._config_api_ref[0] = config_api

        self.hooks = HooksManager(logger_api)
        self.loader = ModuleLoader(path=self.path)
        self.context.set_lab(self)

    # --- Accessors ---
    @property
    def services(self) -> ModuleRegistry:
        return self.context.services

    @property
    def config(self):
        return self._config_api_ref[0]

    @property
    def logger(self):
        return self._logger_api_ref[0]

    # --- Hooks ---
    def register_hook(self, hook: LabHook, callback):
        """
        Register a hook callback.

        Args:
            hook: The hook type
            callback: Plain or coroutine function
        """
        self.hooks.register(hook, callback, self.logger)

    # --- Task management ---
    def register_background_task(self, coroutine) -> asyncio.Task:
        """
        Register a background job.

        Blocking callables are moved to a worker thread.

        Args:
            coroutine: Coroutine function or blocking callable
        """
        if asyncio.iscoroutinefunction(coroutine):
            task = asyncio.create_task(coroutine())
        else:
            task = asyncio.create_task(asyncio.to_thread(coroutine))
        self._background_tasks.append(task)
        return task

    def request_shutdown(self):
        """Request a graceful shutdown from any module or job."""
        log_internal(self.config, self.logger, "Shutdown requested programmatically...", level="CORE")
        asyncio.create_task(self.hooks.dispatch(LabHook.ON_SHUTDOWN_REQUEST))
        if self._stop_event is not None:
            self._stop_event.set()

    # --- Lifecycle ---
    async def bootstrap(self):
        """
        Load, start and ready every configured module.
        """
        if self._bootstrapped:
            return
        self._stop_event = asyncio.Event()

        await self.hooks.dispatch(LabHook.ON_SETTINGS_LOADED)
        print_banner(self.config)

        await self.hooks.dispatch(LabHook.ON_LAB_BOOTSTRAP_START)
        log_internal(self.config, self.logger, "Starting l1lab...", level="CORE", tag="core_init")

        modules_config = self.config.get_modules_config()
        modules_data, disabled = self.loader.discover_modules(modules_config, self.config, self.logger)
        self._module_names = await self.loader.load_modules(
            modules_data, self.modules, self.context,
            self._logger_api_ref, self._config_api_ref, disabled
        )
        self.hooks.set_logger(self.logger)

        await self.loader.start_all_modules(self.modules, self._module_names,
                                            self._logger_api_ref, self._config_api_ref, self.hooks)
        await self.hooks.dispatch(LabHook.ON_LAB_BOOTSTRAP_END)

        await self.loader.ready_all_modules(self.modules, self._module_names,
                                            self._logger_api_ref, self._config_api_ref, self.hooks)
        self._bootstrapped = True
        log_internal(self.config, self.logger, "All modules ready.", level="CORE")

    async def shutdown(self):
        """Stop modules in reverse order and cancel background jobs."""
        if not self._bootstrapped:
            return
        await shutdown(self.modules, self._background_tasks, self.config, self.logger, self._module_names)
        self._bootstrapped = False

    async def run(self, job: Optional[Callable[['Laboratory'], Awaitable[Any]]] = None) -> Any:
        """
        Bootstrap, execute a job, and shut down.

        Without a job the laboratory waits for ``request_shutdown`` unless
        ``system.auto_shutdown`` is set.

        Args:
            job: Coroutine function receiving the laboratory

        Returns:
            The job's result
        """
        try:
            await self.bootstrap()
            if job is not None:
                try:
                    return await job(self)
                except Exception as e:
                    await self.hooks.dispatch(LabHook.ON_ERROR, e)
                    raise
            if not self.config.get("system.auto_shutdown", True):
                await self._stop_event.wait()
            return None
        finally:
            await self.shutdown()

    async def __aenter__(self) -> 'Laboratory':
        await self.bootstrap()
        return self

    async def __aexit__(self, exc_type, exc, tb):
        await self.shutdown()
        return False
