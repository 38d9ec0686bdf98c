"""
Unit tests for stop module.
"""
import asyncio

from l1lab.core.interfaces import IModule, ModuleContext
from l1lab.core.stop import shutdown


class OrderedModule(IModule):
    """Records the order in which modules stop."""

    def __init__(self, name, stopped, fail=False):
        self.name = name
        self._stopped = stopped
        self._fail = fail
        self._context = ModuleContext()

    async def stop(self, context):
        if self._fail:
            raise RuntimeError(f"{self.name} refused to stop")
        self._stopped.append(self.name)


class TestShutdown:
    """Tests for shutdown function."""

    async def test_reverse_load_order(self, recording_logger):
        """Test consumers stop before their providers."""
        stopped = []
        names = ["poly_core", "set_estimator", "experiment"]
        modules = {name: OrderedModule(name, stopped) for name in names}
        await shutdown(modules, [], None, recording_logger, names)
        assert stopped == ["experiment", "set_estimator", "poly_core"]
        assert "Module 'poly_core' stopped" in recording_logger.tagged("core")

    async def test_cancels_background_jobs(self, recording_logger):
        """Test unfinished jobs are cancelled and awaited."""
        task = asyncio.create_task(asyncio.sleep(100))
        await asyncio.sleep(0)
        await shutdown({}, [task], None, recording_logger, [])
        assert task.cancelled()

    async def test_finished_jobs_untouched(self, recording_logger):
        """Test finished jobs keep their result."""
        async def job():
            return 5

        task = asyncio.create_task(job())
        await task
        await shutdown({}, [task], None, recording_logger, [])
        assert task.result() == 5

    async def test_failing_stop_logged(self, recording_logger):
        """Test a failing module does not block the others."""
        stopped = []
        modules = {
            "a": OrderedModule("a", stopped),
            "b": OrderedModule("b", stopped, fail=True),
        }
        await shutdown(modules, [], None, recording_logger, ["a", "b", "missing"])
        assert stopped == ["a"]
        errors = [m for m, level, _ in recording_logger.records if level == "ERROR"]
        assert errors == ["Error stopping module 'b': b refused to stop"]
