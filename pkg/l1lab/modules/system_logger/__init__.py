"""
System Logger Module - timestamped, colour-coded logging for l1lab.

Replaces the kernel's DefaultLogger and highlights estimator updates,
control cuts and falsification events.
"""

from .module import AdvancedLogger, SystemLoggerModule, Colors

__all__ = ["AdvancedLogger", "SystemLoggerModule", "Colors"]
