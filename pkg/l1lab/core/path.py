# l1lab/core/path.py
"""
Project path management.
"""
from typing import Optional, Dict
from pathlib import Path as PathLib


class Path:
    """
    Project path management class.

    Default paths:
        - l1lab_dir: the installed l1lab package (holds ``modules/``)
        - app_dir: working directory of the experiment (holds ``runs/``)
    """

    def __init__(self, app_dir: Optional[str] = None):
        """
        Initialize path manager.

        Args:
            app_dir: Path to the experiment directory (defaults to cwd)
        """
        # path.py is at l1lab/core/path.py
        self._l1lab_dir = PathLib(__file__).parent.parent.resolve()
        self._app_dir = PathLib(app_dir).resolve() if app_dir else PathLib.cwd().resolve()
        self._custom_paths: Dict[str, PathLib] = {}

    @property
    def l1lab(self) -> PathLib:
        """Package path (read-only)."""
        return self._l1lab_dir

    @property
    def app(self) -> PathLib:
        """Experiment directory."""
        return self._app_dir

    def resolve(self, key: str) -> PathLib:
        """
        Get path as PathLib object.

        Args:
            key: Path name (l1lab, l1lab_dir, app, app_dir, or custom name)
        """
        if key in ("l1lab_dir", "l1lab"):
            return self._l1lab_dir
        elif key in ("app_dir", "app"):
            return self._app_dir
        elif key in self._custom_paths:
            return self._custom_paths[key]
        raise KeyError(f"Path '{key}' not found")

    def get(self, key: str) -> str:
        return str(self.resolve(key))

    def set(self, key: str, value: str):
        """
        Set or add a path.

        Args:
            key: Path name
            value: Path value (string)
        """
        if key in ("l1lab_dir", "l1lab"):
            self._l1lab_dir = PathLib(value).resolve()
        elif key in ("app_dir", "app"):
            self._app_dir = PathLib(value).resolve()
        else:
            self._custom_paths[key] = PathLib(value).resolve()

    def expand(self, template: str) -> PathLib:
        """
        Replace ``{l1lab_dir}`` and ``{app_dir}`` placeholders.

        Args:
            template: Path with placeholders

        Returns:
            Resolved path
        """
        text = template.replace("{l1lab_dir}", str(self._l1lab_dir))
        text = text.replace("{app_dir}", str(self._app_dir))
        path = PathLib(text)
        if not path.is_absolute():
            path = self._app_dir / path
        return path

    def __str__(self) -> str:
        return f"Path(l1lab={self._l1lab_dir}, app={self._app_dir})"

    def __repr__(self) -> str:
        return self.__str__()
