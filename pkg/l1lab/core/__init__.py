from .app import Laboratory
from .interfaces import IModule, ModuleContext
from .registry import ModuleRegistry
from .core_apis import CoreLoggerAPI, CoreConfigAPI
from .hook_types import LabHook
from .settings_manager import SettingsManager
from .settings_default import DefaultConfig, DEFAULT_SETTINGS, get_default_settings
from .hooks import HooksManager
from .module_loader import ModuleLoader
from .api import initialize_core_services
from .log import print_banner, log_internal, DefaultLogger
from .inject import inject_system_apis
from .stop import shutdown
from .exceptions import (
    FrameworkError,
    ModuleLoadError,
    DependencyResolutionError,
    ConfigurationError,
    NumericalError,
)

__all__ = [
    'Laboratory',
    'ModuleContext',
    'IModule',
    'ModuleRegistry',
    'ModuleLoader',
    'DefaultLogger',
    'DefaultConfig',
    'DEFAULT_SETTINGS',
    'get_default_settings',
    'SettingsManager',
    'HooksManager',
    'CoreLoggerAPI',
    'CoreConfigAPI',
    'LabHook',
    'FrameworkError',
    'ModuleLoadError',
    'DependencyResolutionError',
    'ConfigurationError',
    'NumericalError',
    'inject_system_apis',
    'initialize_core_services',
    'print_banner',
    'log_internal',
    'shutdown',
]
