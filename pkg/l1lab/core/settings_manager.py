# l1lab/core/settings_manager.py
"""
Project settings management.
"""
import json
from pathlib import Path
from typing import Optional

from l1lab.core.core_apis import CoreConfigAPI, CoreLoggerAPI
from l1lab.core.settings_default import get_default_settings
from l1lab.core.log import log_internal


def merge_settings(target: dict, source: dict) -> dict:
    """
    Recursively merge ``source`` into ``target`` in place.

    Lists and scalars replace; dictionaries merge key by key.

    Returns:
        The updated target
    """
    for key, value in source.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            merge_settings(target[key], value)
        else:
            target[key] = value
    return target


class SettingsManager(CoreConfigAPI):
    """
    Project settings management.

    Priority order:
    1. Defaults (default values)
    2. Settings from JSON (experiment file)
    3. Code settings (initial_settings, e.g. CLI overrides) - highest priority
    """

    # Class logger - for logging before main logger is registered
    _class_logger: Optional[CoreLoggerAPI] = None

    @classmethod
    def set_logger(cls, logger_api: CoreLoggerAPI):
        """Set logger for use in class."""
        cls._class_logger = logger_api

    def _log(self, message: str, level: str = "ERROR"):
        """Log with class logger or temporary logger."""
        if SettingsManager._class_logger:
            SettingsManager._class_logger.log(message, level=level, tag="config")
        else:
            log_internal(None, None, message, level=level, tag="config")

    def __init__(self, settings_path: Optional[str] = None, initial_settings: Optional[dict] = None,
                 strict: bool = False):
        """
        Initialize settings manager.

        Args:
            settings_path: Path to JSON file (None skips the file layer)
            initial_settings: Code settings (highest priority)
            strict: Re-raise file errors instead of falling back to defaults
        """
        self._strict = strict
        self.settings_path = settings_path

        self._settings = get_default_settings()

        if settings_path:
            self._load_settings(settings_path)

        if initial_settings:
            self.update_settings(initial_settings)

    def _load_settings(self, path: str):
        """Read settings from JSON file with error handling."""
        full_path = Path(path)
        if not full_path.exists():
            if self._strict:
                raise FileNotFoundError(f"Settings file not found: {full_path}")
            return
        try:
            with open(full_path, 'r', encoding='utf-8') as f:
                json_data = json.load(f)
            self.update_settings(json_data)
        except json.JSONDecodeError as e:
            self._log(f"Invalid JSON in {full_path}: {e}")
            if self._strict:
                raise
            self._log("Skipping settings file. Using default settings.")

    def get(self, key: str, default=None):
        """Get value with support for nested keys."""
        value = self._settings
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value):
        """Set value."""
        keys = key.split('.')
        current = self._settings
        for k in keys[:-1]:
            if not isinstance(current.get(k), dict):
                current[k] = {}
            current = current[k]
        current[keys[-1]] = value

    def update_settings(self, new_settings: dict):
        """Merge new settings with current settings."""
        merge_settings(self._settings, new_settings)

    def as_dict(self) -> dict:
        """Return a deep copy of the effective settings."""
        return json.loads(json.dumps(self._settings))

    # --- Module settings ---
    def get_modules_config(self) -> list:
        """
        Get module settings.

        Returns:
            List of module groups (path, names)
        """
        val = self.get("modules", [])
        if not isinstance(val, list):
            return []
        return val

    # --- Numerical settings ---
    def get_norm_options(self) -> dict:
        return dict(self.get("norm", {}) or {})

    def get_solver_options(self) -> dict:
        return dict(self.get("solver", {}) or {})

    def get_projection_options(self) -> dict:
        return dict(self.get("projection", {}) or {})

    def get_experiment_settings(self) -> dict:
        return json.loads(json.dumps(self.get("experiment", {}) or {}))

    # --- Output settings ---
    def get_output_dir(self) -> str:
        return self.get("output.dir", "{app_dir}/runs")

    def get_output_names(self) -> dict:
        names = dict(self.get("output", {}) or {})
        names.pop("dir", None)
        return names

    def get_batch_workers(self) -> Optional[int]:
        return self.get("batch.workers")

    # --- Log settings ---
    def show_logs(self) -> bool:
        return self.get("logs.show_logs", True)

    def show_banner(self) -> bool:
        return self.get("logs.show_banner", True)

    def get_hide_log_levels(self) -> list:
        val = self.get("logs.hide_log_levels")
        return val if isinstance(val, list) else []

    def get_hide_log_tags(self) -> list:
        val = self.get("logs.hide_log_tags")
        return val if isinstance(val, list) else []

    def is_debug(self) -> bool:
        return self.get("logs.debug_mode", True)

    # --- Project information ---
    def get_project_name(self) -> str:
        return self.get("information.project_name", "l1lab")

    def get_project_version(self) -> str:
        return self.get("information.project_version", "0.1.0")

    def get_project_info(self) -> str:
        return self.get("information.project_info", "")

    # --- Templates ---
    def get_banner_template(self) -> str:
        return self.get("template.project_banner_template", "{project_name}\n")

    def get_system_log_template(self) -> str:
        return self.get("template.system_log_template", "[{level}] {message}")

    def get_banner_color_code(self) -> str:
        return self.get("template.banner_color_code", "33")

    def get_system_log_color_code(self) -> str:
        return self.get("template.system_log_color_code", "96")
