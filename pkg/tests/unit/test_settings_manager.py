"""
Unit tests for SettingsManager.
"""
import json

import pytest

from l1lab.core.settings_default import DEFAULT_SETTINGS, S7_XI, get_default_settings
from l1lab.core.settings_manager import SettingsManager, merge_settings


@pytest.fixture(autouse=True)
def _no_class_logger():
    SettingsManager._class_logger = None
    yield
    SettingsManager._class_logger = None


def _write(path, data):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f)
    return str(path)


class TestMergeSettings:
    """Tests for merge_settings function."""

    def test_nested_merge(self):
        """Test dictionaries merge and other values replace."""
        target = {"a": {"x": 1, "y": 2}, "l": [1, 2]}
        merge_settings(target, {"a": {"y": 3}, "l": [9]})
        assert target == {"a": {"x": 1, "y": 3}, "l": [9]}

    def test_returns_target(self):
        """Test the merged dict is returned."""
        target = {}
        assert merge_settings(target, {"k": 1}) is target


class TestDefaults:
    """Tests for the default settings."""

    def test_deep_copy(self):
        """Test callers cannot mutate the defaults."""
        settings = get_default_settings()
        settings["experiment"]["plant"]["xi"][0] = 99.0
        assert DEFAULT_SETTINGS["experiment"]["plant"]["xi"][0] == S7_XI[0]

    def test_reference_study(self):
        """Test the defaults describe the reference study."""
        experiment = DEFAULT_SETTINGS["experiment"]
        assert experiment["plant"]["mu"] == 20
        assert experiment["mu_bar"] == 40
        assert experiment["estimator"]["eps"] == 0.001
        assert experiment["xi_polytope"] is None


class TestSettingsManager:
    """Tests for SettingsManager class."""

    def test_defaults_without_file(self):
        """Test defaults are used when no file is given."""
        manager = SettingsManager()
        assert manager.get("experiment.horizon") == 2000
        assert manager.get("experiment.plant.n") == 4

    def test_missing_file_falls_back(self, tmp_path):
        """Test a missing file is ignored outside strict mode."""
        manager = SettingsManager(str(tmp_path / "missing.json"))
        assert manager.get("experiment.mu_bar") == 40

    def test_missing_file_strict(self, tmp_path):
        """Test strict mode refuses a missing file."""
        with pytest.raises(FileNotFoundError):
            SettingsManager(str(tmp_path / "missing.json"), strict=True)

    def test_file_layer(self, tmp_path):
        """Test the experiment file overrides defaults key by key."""
        path = _write(tmp_path / "experiment.json", {"experiment": {"horizon": 500, "plant": {"mu": 5}}})
        manager = SettingsManager(path)
        assert manager.get("experiment.horizon") == 500
        assert manager.get("experiment.plant.mu") == 5
        assert manager.get("experiment.plant.n") == 4

    def test_code_settings_win(self, tmp_path):
        """Test initial settings override the file."""
        path = _write(tmp_path / "experiment.json", {"experiment": {"seed": 1}})
        manager = SettingsManager(path, initial_settings={"experiment": {"seed": 2}})
        assert manager.get("experiment.seed") == 2

    def test_invalid_json(self, tmp_path, recording_logger):
        """Test malformed JSON is reported and skipped."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        SettingsManager.set_logger(recording_logger)
        manager = SettingsManager(str(path))
        assert manager.get("experiment.horizon") == 2000
        assert any("Invalid JSON" in m for m in recording_logger.tagged("config"))

    def test_invalid_json_strict(self, tmp_path):
        """Test strict mode re-raises malformed JSON."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(json.JSONDecodeError):
            SettingsManager(str(path), strict=True)

    def test_get_default(self):
        """Test missing keys give the default."""
        manager = SettingsManager()
        assert manager.get("experiment.nothing") is None
        assert manager.get("experiment.horizon.deeper", "x") == "x"

    def test_set_creates_sections(self):
        """Test set builds missing intermediate sections."""
        manager = SettingsManager()
        manager.set("batch.workers", 4)
        manager.set("extra.section.key", True)
        assert manager.get_batch_workers() == 4
        assert manager.get("extra.section.key") is True

    def test_as_dict_is_copy(self):
        """Test as_dict cannot change the manager."""
        manager = SettingsManager()
        data = manager.as_dict()
        data["experiment"]["horizon"] = 1
        assert manager.get("experiment.horizon") == 2000

    def test_section_accessors(self):
        """Test the numerical, output and module accessors."""
        manager = SettingsManager(initial_settings={"output": {"dir": "/tmp/runs"}})
        assert manager.get_norm_options()["tol"] == 1e-9
        assert manager.get_solver_options()["iteration_factor"] == 50
        assert manager.get_projection_options()["max_sweeps"] == 10000
        assert manager.get_experiment_settings()["plant"]["xi"] == S7_XI
        assert manager.get_output_dir() == "/tmp/runs"
        assert "dir" not in manager.get_output_names()
        assert manager.get_modules_config()[0]["names"][-1] == "experiment"

    def test_modules_config_must_be_list(self):
        """Test a malformed modules section gives an empty list."""
        manager = SettingsManager(initial_settings={"modules": {"path": "x"}})
        assert manager.get_modules_config() == []

    def test_log_accessors(self):
        """Test log settings and their defaults."""
        manager = SettingsManager(initial_settings={"logs": {"hide_log_tags": "lp"}})
        assert manager.show_logs() is True
        assert manager.get_hide_log_levels() == ["DEBUG"]
        assert manager.get_hide_log_tags() == []
        assert manager.is_debug() is False
        assert manager.get_project_name() == "l1lab"
