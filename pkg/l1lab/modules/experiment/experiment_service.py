"""
Experiment service - runs, batches and artefacts through the laboratory.
"""
import asyncio
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from l1lab.core.core_apis import CoreConfigAPI, CoreLoggerAPI
from l1lab.core.hooks import HooksManager
from l1lab.core.path import Path as PathManager

from .core.batch import run_batch
from .core.config import ExperimentConfig
from .core.emit import emit
from .core.presets import s7_config
from .core.runner import RunResult, RunServices, run


class ExperimentService:
    """
    Runs experiments with the services registered in the laboratory.

    The configuration comes from the ``experiment`` settings unless one is
    passed explicitly; output paths resolve against the experiment directory.
    """

    def __init__(
        self,
        config_api: CoreConfigAPI,
        run_services: RunServices,
        hooks: Optional[HooksManager] = None,
        path: Optional[PathManager] = None
    ):
        self.config_api = config_api
        self.run_services = run_services
        self.hooks = hooks
        self.path = path or PathManager()
        self._logger: Optional[CoreLoggerAPI] = None

    def set_logger(self, logger: Optional[CoreLoggerAPI]):
        self._logger = logger

    def config(self) -> ExperimentConfig:
        """Validated config from the current settings."""
        return ExperimentConfig.from_settings(self.config_api)

    def output_dir(self, config: Optional[ExperimentConfig] = None, override: Optional[str] = None) -> Path:
        template = override or (config.output.dir if config else None) or self.config_api.get("output.dir") \
            or "{app_dir}/runs"
        return self.path.expand(str(template))

    def run(self, config: Optional[ExperimentConfig] = None) -> RunResult:
        config = config or self.config()
        return run(config, services=self.run_services, hooks=self.hooks, logger=self._logger)

    async def run_async(self, config: Optional[ExperimentConfig] = None) -> RunResult:
        """``run`` in a worker thread, keeping the event loop free."""
        return await asyncio.to_thread(self.run, config)

    def emit(self, result: RunResult, out_dir: Optional[str] = None) -> Dict[str, Path]:
        target = self.output_dir(result.config, out_dir)
        paths = emit(result, target, result.config.output)
        if self._logger:
            self._logger.log(f"Artefacts written to {target}", level="INFO", tag="experiment")
        return paths

    def replicate(self, kind: str = "random", controller: str = "adaptive_optimal", seed: int = 0,
                  horizon: int = 2000) -> RunResult:
        """Reference study for one seed."""
        return self.run(s7_config(kind, controller, seed, horizon))

    async def batch(self, seeds: Sequence[int], config: Optional[ExperimentConfig] = None,
                    workers: Optional[int] = None, out_dir: Optional[str] = None) -> List[Dict[str, Any]]:
        config = config or self.config()
        if workers is None:
            workers = self.config_api.get("batch.workers")
        target = self.output_dir(config, out_dir)
        return await run_batch(config, seeds, workers=workers, out_dir=target, logger=self._logger)
