# l1lab/core/hook_types.py
"""
Hook types for laboratory and simulation events.
"""
from enum import Enum


class LabHook(Enum):
    """
    Hook types for laboratory lifecycle and simulation events.

    Lifecycle hooks are dispatched asynchronously by the Laboratory;
    simulation hooks are emitted synchronously from the run loop.
    """
    ON_SETTINGS_LOADED = "on_settings_loaded"
    """Triggered when settings are loaded."""
    ON_LAB_BOOTSTRAP_START = "on_lab_bootstrap_start"
    """Triggered when laboratory bootstrap starts."""
    ON_LAB_BOOTSTRAP_END = "on_lab_bootstrap_end"
    """Triggered when laboratory bootstrap completes."""
    ON_MODULE_LOADED = "on_module_loaded"
    """Triggered when a module is started."""
    ON_ALL_MODULES_READY = "on_all_modules_ready"
    """Triggered when all modules have started and are ready."""
    ON_ERROR = "on_error"
    """Triggered when a job fails."""
    ON_SHUTDOWN_REQUEST = "on_shutdown_request"
    """Triggered when a shutdown is requested via request_shutdown()."""

    ON_RUN_START = "on_run_start"
    """Triggered before the first step of a closed-loop run."""
    ON_ESTIMATE_UPDATED = "on_estimate_updated"
    """Triggered when the dead zone is violated and the estimate changes."""
    ON_CONTROL_CUT = "on_control_cut"
    """Triggered when the adaptive control input is clamped."""
    ON_FALSIFIED = "on_falsified"
    """Triggered when the collected data contradict the model class."""
    ON_RUN_END = "on_run_end"
    """Triggered with the RunSummary when a run finishes."""
