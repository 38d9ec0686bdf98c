"""
Shared pytest fixtures for l1lab tests.
"""
import json
from typing import List, Optional, Tuple
from unittest.mock import Mock

import numpy as np
import pytest

from l1lab.core.interfaces import ModuleContext
from l1lab.core.registry import ModuleRegistry
from l1lab.core.hooks import HooksManager
from l1lab.core.core_apis import CoreConfigAPI, CoreLoggerAPI
from l1lab.core.settings_default import S7_XI, S7_XI0


# ============================================================================
# Registry and Context Fixtures
# ============================================================================

@pytest.fixture
def registry():
    """Create a fresh ModuleRegistry for each test."""
    return ModuleRegistry()


@pytest.fixture
def module_context():
    """Create a fresh ModuleContext for each test."""
    return ModuleContext()


@pytest.fixture
def hooks_manager():
    """Create a fresh HooksManager for each test."""
    return HooksManager()


# ============================================================================
# Mock API Fixtures
# ============================================================================

@pytest.fixture
def mock_config_api():
    """Create a mock CoreConfigAPI returning None for every key."""
    config = Mock(spec=CoreConfigAPI)
    config.get = Mock(return_value=None)
    return config


@pytest.fixture
def mock_logger_api():
    """Create a mock CoreLoggerAPI."""
    logger = Mock(spec=CoreLoggerAPI)
    logger.log = Mock()
    return logger


class RecordingLogger(CoreLoggerAPI):
    """Logger that keeps (message, level, tag) triples."""

    def __init__(self):
        self.records: List[Tuple[str, str, Optional[str]]] = []

    def log(self, message: str, level: str = "INFO", tag: Optional[str] = None, **kwargs):
        self.records.append((message, level, tag))

    def tagged(self, tag: str) -> List[str]:
        return [m for m, _, t in self.records if t == tag]


@pytest.fixture
def recording_logger():
    return RecordingLogger()


@pytest.fixture
def quiet_settings():
    """Laboratory settings with log output switched off."""
    return {"logs": {"show_logs": False, "show_banner": False}}


# ============================================================================
# Plant Fixtures
# ============================================================================

@pytest.fixture
def s7_xi():
    return np.array(S7_XI)


@pytest.fixture
def s7_xi0():
    return np.array(S7_XI0)


@pytest.fixture
def s7_params():
    """The reference unstable fourth-order plant with gains (1, 0.2, 0.02), μ = 20."""
    from l1lab.modules.plant_sim import PlantParams
    return PlantParams(xi=S7_XI, n=4, delta_w=1.0, delta_y=0.2, delta_u=0.02, mu=20)


@pytest.fixture
def s7_Xi():
    from l1lab.modules.experiment import s7_polytope
    return s7_polytope()


@pytest.fixture
def first_order_params():
    """y_{t+1} = 0.5 y_t + 2 u_t + v_{t+1}."""
    from l1lab.modules.plant_sim import PlantParams
    return PlantParams(xi=[-0.5, 2.0], n=1, delta_w=1.0, delta_y=0.0, delta_u=0.0, mu=2)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# ============================================================================
# Temporary Directory Fixtures
# ============================================================================

@pytest.fixture
def temp_app_dir(tmp_path):
    """Create an experiment directory with three chained modules."""
    app_dir = tmp_path / "test_app"
    app_dir.mkdir()

    chain = [
        ("module_a", "ModuleA", ["capability_a"], []),
        ("module_b", "ModuleB", ["capability_b"], ["capability_a"]),
        ("module_c", "ModuleC", ["capability_c"], ["capability_b"]),
    ]
    for name, entrypoint, provides, requires in chain:
        module_dir = app_dir / name
        module_dir.mkdir()
        manifest = {
            "name": name,
            "type": "application",
            "entrypoint": entrypoint,
            "provides": provides,
            "requires": requires
        }
        with open(module_dir / "manifest.json", "w", encoding="utf-8") as f:
            json.dump(manifest, f)

    return app_dir


# ============================================================================
# Test Module Classes
# ============================================================================

class MockModule:
    """Mock module for testing."""

    name = "mock_module"
    id = "mock_id"
    provides = []
    requires = []

    def __init__(self):
        self.load_called = False
        self.start_called = False
        self.ready_called = False
        self.stop_called = False
        self._context = None

    async def load(self, context):
        self.load_called = True
        self._context = context

    async def start(self, context):
        self.start_called = True

    async def ready(self, context):
        self.ready_called = True

    async def stop(self, context):
        self.stop_called = True


@pytest.fixture
def mock_module():
    """Create a mock module instance."""
    return MockModule()


@pytest.fixture
def sample_module_info(tmp_path):
    """Create sample module info dictionary."""
    module_path = tmp_path / "sample_module"
    module_path.mkdir()

    return {
        "path": module_path,
        "manifest": {
            "name": "sample_module",
            "id": "sample123",
            "type": "application",
            "entrypoint": "SampleModule",
            "provides": ["sample_capability"],
            "requires": []
        }
    }
