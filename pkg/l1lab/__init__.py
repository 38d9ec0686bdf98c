# l1lab/__init__.py
# Main access point to the laboratory

from .core import Laboratory

__version__ = "0.1.0"

__all__ = [
    'Laboratory',
    '__version__',
]
