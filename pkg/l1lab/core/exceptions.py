"""
Framework exception classes.
"""


class FrameworkError(Exception):
    """
    Base exception for the laboratory.

    All l1lab-specific exceptions inherit from this class.
    """
    pass


class ModuleLoadError(FrameworkError):
    """
    Exception raised when a module fails to load.

    This exception is raised when there is an error during
    module discovery, instantiation, or loading.
    """
    pass


class DependencyResolutionError(FrameworkError):
    """
    Exception raised when module dependencies cannot be resolved.

    This exception is raised when a module requires a capability
    that is not provided by any other module.
    """
    pass


class ConfigurationError(FrameworkError):
    """
    Exception raised when settings cannot be turned into a valid experiment.

    Raised for missing keys, wrong shapes, and violated parameter
    relations such as mu_bar < 2 * mu.
    """
    pass


class NumericalError(FrameworkError):
    """
    Base class for errors raised by the numerical modules.

    Modules define their own subclasses in their ``exceptions.py``.
    """
    pass
