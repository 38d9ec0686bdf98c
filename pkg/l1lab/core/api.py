# l1lab/core/api.py
"""
Core service construction.
"""
import os
from typing import Optional

from l1lab.core.registry import ModuleRegistry
from l1lab.core.log import DefaultLogger
from l1lab.core.settings_manager import SettingsManager
from l1lab.core.path import Path


def initialize_core_services(
    registry: ModuleRegistry,
    initial_settings: Optional[dict] = None,
    settings_path: Optional[str] = None,
    app_dir: Optional[str] = None,
    strict: bool = False
):
    """
    Create and register core services.

    Args:
        registry: Module registry
        initial_settings: Code settings (highest priority)
        settings_path: Path to a JSON experiment file; relative paths are
            resolved against the current directory, then app_dir
        app_dir: Experiment directory
        strict: Fail on a missing or malformed settings file

    Returns:
        Tuple of (logger_api, config_api, path_manager)
    """
    path_manager = Path(app_dir)

    full_settings_path = None
    if settings_path:
        full_settings_path = settings_path
        if not os.path.isabs(settings_path) and not os.path.exists(settings_path):
            full_settings_path = str(path_manager.resolve("app") / settings_path)

    # Logger first, so that settings errors can be reported
    logger_api = DefaultLogger(None)
    SettingsManager.set_logger(logger_api)

    config_api = SettingsManager(full_settings_path, initial_settings=initial_settings, strict=strict)

    logger_api.config = config_api

    registry.set("core_config", config_api)
    registry.set("core_logger", logger_api)
    registry.set("core_path", path_manager)

    return logger_api, config_api, path_manager
