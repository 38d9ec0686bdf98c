# l1lab/core/log.py
"""
Logging functions and classes.
"""
import os
from typing import Optional
from l1lab.core.core_apis import CoreLoggerAPI, CoreConfigAPI


def print_banner(config_api: CoreConfigAPI):
    """
    Print the laboratory banner.

    Args:
        config_api: Configuration API
    """
    if not config_api.show_banner():
        return
    template = config_api.get_banner_template()
    banner_content = template.format(
        project_name=config_api.get_project_name(),
        project_version=config_api.get_project_version(),
        project_info=config_api.get_project_info()
    )
    color_code = config_api.get_banner_color_code()
    if os.name == 'nt': os.system('')
    print(f"\033[{color_code}m{banner_content}\033[0m")


def log_internal(config_api: Optional[CoreConfigAPI], logger_api: Optional[CoreLoggerAPI],
                 message: str, level: str = "INFO", tag: str = "core"):
    """
    Print internal kernel messages.

    Args:
        config_api: Configuration API (unused when a logger exists)
        logger_api: Logger API
        message: Log message
        level: Log level (CORE, INFO, WARNING, ERROR, DEBUG)
        tag: Tag for filtering
    """
    if logger_api is None:
        print(f"[{level}][{tag}] {message}")
        return
    logger_api.log(message, level=level, tag=tag)


# --- Helper classes for logging ---

class _FallbackLogger:
    """
    Temporary logger used before any configuration is available.
    """
    def log(self, message: str, level: str = "INFO", tag: Optional[str] = None, **kwargs):
        level_prefix = f"[{level}]" if level else ""
        tag_prefix = f" [{tag}]" if tag else ""
        print(f"{level_prefix}{tag_prefix} {message}")


class _FallbackConfig:
    """
    Fallback config for when the settings manager does not exist yet.
    """
    def get_project_name(self) -> str:
        return "l1lab"

    def get_system_log_template(self) -> str:
        return "[{level}]\t{message}"

    def get_system_log_color_code(self) -> str:
        return "96"

    def is_debug(self) -> bool:
        return True

    def show_logs(self) -> bool:
        return True

    def get_hide_log_levels(self) -> list:
        return []

    def get_hide_log_tags(self) -> list:
        return []

    def show_banner(self) -> bool:
        return False

    def get_banner_template(self) -> str:
        return "{project_name}\n"

    def get_banner_color_code(self) -> str:
        return "33"


def should_log(config, level: str, tag: Optional[str] = None) -> bool:
    """
    Decide whether a message passes the configured filters.

    Shared by DefaultLogger and the system_logger module.

    Args:
        config: Object exposing the log accessors of SettingsManager
        level: Log level
        tag: Log tag

    Returns:
        True if the message should be printed
    """
    if not config.show_logs():
        return False

    if tag:
        hidden_tags = config.get_hide_log_tags()
        if isinstance(hidden_tags, list) and tag in hidden_tags:
            return False

    hidden_levels = config.get_hide_log_levels()
    if isinstance(hidden_levels, list) and level in hidden_levels:
        return False

    # debug_mode off keeps only lifecycle and result lines
    if level == "DEBUG" and not config.is_debug():
        return False

    return True


class DefaultLogger(CoreLoggerAPI):
    """
    Simple default logger.

    Formats messages with ``template.system_log_template`` and prints
    them in a single colour.
    """
    def __init__(self, config_api: Optional[CoreConfigAPI]):
        """
        Initialize default logger.

        Args:
            config_api: Configuration API (None selects the fallback config)
        """
        self.config = config_api
        if self.config is None:
            self.config = _FallbackConfig()

    def _should_log(self, level: str, tag: Optional[str] = None) -> bool:
        return should_log(self.config, level, tag)

    def log(self, message: str, level: str = "INFO", tag: Optional[str] = None, **kwargs):
        """
        Log message.

        Args:
            message: Log message
            level: Log level
            tag: Log tag
            **kwargs: Ignored styling hints (level_color, text_color)
        """
        if not self._should_log(level, tag):
            return

        if os.name == 'nt':
            os.system('')

        template = self.config.get_system_log_template()
        color_code = self.config.get_system_log_color_code()

        formatted_msg = template.format(
            project_name=self.config.get_project_name(),
            level=level,
            tag=tag or "",
            message=message
        )

        print(f"\033[{color_code}m{formatted_msg}\033[0m")
