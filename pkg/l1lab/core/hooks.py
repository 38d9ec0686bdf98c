import asyncio
import inspect
from typing import List, Callable, Dict, Optional
from l1lab.core.hook_types import LabHook
from l1lab.core.log import log_internal
from l1lab.core.core_apis import CoreLoggerAPI


class HooksManager:
    """
    Manager for laboratory hooks.

    Lifecycle events go through the async ``dispatch``; the simulation
    loop, which runs synchronously and possibly in a worker thread, uses
    ``emit`` and only reaches plain callables.
    """

    def __init__(self, logger_api: Optional[CoreLoggerAPI] = None):
        """
        Initialize hooks manager.

        Args:
            logger_api: Logger used to report callback failures
        """
        self._hooks: Dict[LabHook, List[Callable]] = {}
        self._logger_api = logger_api

    def set_logger(self, logger_api: Optional[CoreLoggerAPI]):
        self._logger_api = logger_api

    def register(self, hook: LabHook, callback: Callable, logger_api: Optional[CoreLoggerAPI] = None):
        """
        Register a callback for a specific hook.

        Args:
            hook: The hook type to register for
            callback: The callback function to execute
            logger_api: Optional logger API for logging
        """
        self._hooks.setdefault(hook, []).append(callback)
        log_internal(None, logger_api or self._logger_api, f"Registered hook: {hook.value}",
                     level="DEBUG", tag="core_hooks")

    def has(self, hook: LabHook) -> bool:
        return bool(self._hooks.get(hook))

    async def dispatch(self, hook: LabHook, *args, **kwargs):
        """
        Dispatch a hook to all registered callbacks.

        Args:
            hook: The hook type to dispatch
            *args: Positional arguments to pass to callbacks
            **kwargs: Keyword arguments to pass to callbacks
        """
        for callback in self._hooks.get(hook, []):
            try:
                if asyncio.iscoroutinefunction(callback):
                    await callback(*args, **kwargs)
                else:
                    callback(*args, **kwargs)
            except Exception as e:
                log_internal(None, self._logger_api, f"Hook Error in {hook.value}: {e}", level="ERROR")

    def emit(self, hook: LabHook, *args, **kwargs):
        """
        Synchronously call the plain callbacks of a hook.

        Coroutine callbacks are skipped with a warning; use ``dispatch``
        from async code for those.
        """
        for callback in self._hooks.get(hook, []):
            if inspect.iscoroutinefunction(callback):
                log_internal(None, self._logger_api,
                             f"Async callback skipped for sync hook {hook.value}", level="WARNING")
                continue
            try:
                callback(*args, **kwargs)
            except Exception as e:
                log_internal(None, self._logger_api, f"Hook Error in {hook.value}: {e}", level="ERROR")
