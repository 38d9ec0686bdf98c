"""
Unit tests for the core API contracts.
"""
import pytest

from l1lab.core.core_apis import CoreConfigAPI, CoreLoggerAPI
from l1lab.core.settings_default import DefaultConfig


class TestCoreLoggerAPI:
    """Tests for CoreLoggerAPI."""

    def test_is_abstract(self):
        """Test the interface cannot be instantiated."""
        with pytest.raises(TypeError):
            CoreLoggerAPI()

    def test_implementation_receives_tag(self):
        """Test an implementation gets message, level and tag."""
        class ListLogger(CoreLoggerAPI):
            def __init__(self):
                self.lines = []

            def log(self, message, level="INFO", tag=None, **kwargs):
                self.lines.append((level, tag, message))

        logger = ListLogger()
        logger.log("t=3 update", level="DEBUG", tag="estimator")
        assert logger.lines == [("DEBUG", "estimator", "t=3 update")]


class TestCoreConfigAPI:
    """Tests for CoreConfigAPI."""

    def test_is_abstract(self):
        """Test the interface cannot be instantiated."""
        with pytest.raises(TypeError):
            CoreConfigAPI()

    def test_default_config_returns_none(self):
        """Test the placeholder config knows nothing."""
        config = DefaultConfig()
        assert isinstance(config, CoreConfigAPI)
        assert config.get("experiment.horizon") is None
