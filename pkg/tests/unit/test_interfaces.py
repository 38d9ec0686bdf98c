"""
Unit tests for IModule and ModuleContext.
"""
from unittest.mock import Mock

from l1lab.core.interfaces import IModule, ModuleContext
from l1lab.core.registry import ModuleRegistry


class TestModuleContext:
    """Tests for ModuleContext class."""

    def test_fresh_context(self):
        """Test a new context has an empty registry and no laboratory."""
        context = ModuleContext()
        assert isinstance(context.services, ModuleRegistry)
        assert context.services.keys() == []
        assert context.get_lab() is None
        assert context.metadata == {}

    def test_set_lab(self):
        """Test the laboratory reference is kept."""
        context = ModuleContext()
        lab = Mock()
        context.set_lab(lab)
        assert context.get_lab() is lab


class TestIModule:
    """Tests for the IModule defaults."""

    async def test_lifecycle_methods_are_optional(self, module_context):
        """Test a bare module accepts every lifecycle call."""
        class Bare(IModule):
            name = "bare"

        module = Bare()
        assert await module.load(module_context) is None
        assert await module.start(module_context) is None
        assert await module.ready(module_context) is None
        assert await module.stop(module_context) is None

    def test_class_attributes(self):
        """Test the capability lists default to empty."""
        assert IModule.provides == []
        assert IModule.requires == []

    async def test_module_registers_service(self, module_context):
        """Test the usual pattern of publishing a service in load."""
        class Provider(IModule):
            name = "provider"
            provides = ["thing_service"]

            async def load(self, context):
                context.services.set("thing_service", 42)

        await Provider().load(module_context)
        assert module_context.services.require("thing_service") == 42
