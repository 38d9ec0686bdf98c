"""
Unit tests for Path class.
"""
from pathlib import Path as PathLib

import pytest

from l1lab.core.path import Path


class TestPath:
    """Tests for Path class."""

    def test_package_dir(self):
        """Test the package path points at l1lab and holds the modules."""
        path = Path()
        assert path.l1lab.name == "l1lab"
        assert (path.l1lab / "modules").is_dir()
        assert path.get("l1lab_dir") == str(path.l1lab)

    def test_app_dir_defaults_to_cwd(self):
        """Test the experiment directory defaults to the working directory."""
        assert Path().app == PathLib.cwd().resolve()

    def test_app_dir(self, tmp_path):
        """Test an explicit experiment directory."""
        path = Path(app_dir=str(tmp_path))
        assert path.app == tmp_path.resolve()
        assert path.resolve("app_dir") == tmp_path.resolve()

    def test_custom_paths(self, tmp_path):
        """Test custom keys can be set and resolved."""
        path = Path(app_dir=str(tmp_path))
        path.set("runs", str(tmp_path / "runs"))
        assert path.resolve("runs") == (tmp_path / "runs").resolve()

    def test_set_app(self, tmp_path):
        """Test the experiment directory can be moved."""
        path = Path()
        path.set("app", str(tmp_path))
        assert path.app == tmp_path.resolve()

    def test_unknown_key(self):
        """Test unknown keys raise KeyError."""
        with pytest.raises(KeyError):
            Path().resolve("nowhere")

    def test_expand_placeholders(self, tmp_path):
        """Test {app_dir} and {l1lab_dir} are replaced."""
        path = Path(app_dir=str(tmp_path))
        assert path.expand("{app_dir}/runs") == tmp_path.resolve() / "runs"
        assert path.expand("{l1lab_dir}/modules") == path.l1lab / "modules"

    def test_expand_relative(self, tmp_path):
        """Test relative paths resolve against the experiment directory."""
        path = Path(app_dir=str(tmp_path))
        assert path.expand("out/seed_1") == tmp_path.resolve() / "out" / "seed_1"

    def test_expand_absolute(self, tmp_path):
        """Test absolute paths stay as they are."""
        target = tmp_path / "elsewhere"
        assert Path().expand(str(target)) == target
