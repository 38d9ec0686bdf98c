from l1lab.core.core_apis import CoreLoggerAPI, CoreConfigAPI
from l1lab.core.interfaces import IModule
from l1lab.core.log import DefaultLogger, log_internal
from l1lab.core.registry import ModuleRegistry


def inject_system_apis(module_instance: IModule, registry: ModuleRegistry,
                       logger_ref: list, config_ref: list) -> bool:
    """
    Adopt a logger or config published by a freshly loaded module.

    Args:
        module_instance: The module instance just loaded
        registry: The module registry
        logger_ref: One-element list holding the active logger
        config_ref: One-element list holding the active config

    Returns:
        True if anything was replaced
    """
    replaced = False

    logger_service = registry.get("core_logger")
    if isinstance(logger_service, CoreLoggerAPI) and logger_service is not logger_ref[0]:
        log_internal(config_ref[0], logger_ref[0],
                     f"Overriding Core Logger with module: {module_instance.name}",
                     level="CORE", tag="core_init")
        logger_ref[0] = logger_service
        replaced = True

    config_service = registry.get("core_config")
    if isinstance(config_service, CoreConfigAPI) and config_service is not config_ref[0]:
        log_internal(config_ref[0], logger_ref[0],
                     f"Overriding Core Config with module: {module_instance.name}",
                     level="CORE", tag="core_init")
        config_ref[0] = config_service
        if isinstance(logger_ref[0], DefaultLogger):
            logger_ref[0].config = config_service
        replaced = True

    return replaced
