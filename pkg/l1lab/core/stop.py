import asyncio
from typing import List, Dict

from l1lab.core.interfaces import IModule
from l1lab.core.core_apis import CoreLoggerAPI, CoreConfigAPI
from l1lab.core.log import log_internal


async def shutdown(modules: Dict[str, IModule], background_tasks: List[asyncio.Task],
                   config_api: CoreConfigAPI, logger_api: CoreLoggerAPI,
                   module_names: List[str]):
    """
    Execute the shutdown sequence of the laboratory.

    Cancels unfinished background jobs, then stops modules in reverse
    load order so that consumers stop before their providers.

    Args:
        modules: Dictionary of all loaded modules
        background_tasks: Tasks registered through register_background_task
        config_api: Configuration API
        logger_api: Logger API
        module_names: Module names in load order
    """
    log_internal(config_api, logger_api, "Shutting down laboratory...", level="CORE")

    pending = [task for task in background_tasks if not task.done()]
    for task in pending:
        task.cancel()
    if pending:
        await asyncio.gather(*pending, return_exceptions=True)

    for mod_name in reversed(module_names):
        if mod_name not in modules:
            continue
        try:
            await modules[mod_name].stop(modules[mod_name]._context)
            log_internal(config_api, logger_api, f"Module '{mod_name}' stopped", level="CORE", tag="core")
        except Exception as e:
            log_internal(config_api, logger_api, f"Error stopping module '{mod_name}': {e}",
                         level="ERROR", tag="core")
