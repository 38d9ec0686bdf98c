"""
Seed batches: one run per seed in a process pool, one merged summary file.
"""
import asyncio
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from l1lab.core.core_apis import CoreLoggerAPI

from .config import ExperimentConfig
from .emit import emit, write_summaries
from .runner import run


def run_seed(config_data: Dict[str, Any], seed: int, out_dir: Optional[str] = None) -> Dict[str, Any]:
    """
    Worker entry point: rebuild the config, run one seed, write its files.

    Takes and returns plain data so it can cross a process boundary.
    """
    config = ExperimentConfig.from_plain(config_data).replace(seed=seed)
    result = run(config)
    if out_dir is not None:
        emit(result, Path(out_dir) / f"seed_{seed}", config.output)
    return result.summary.to_dict()


async def run_batch(
    config: ExperimentConfig,
    seeds: Sequence[int],
    workers: Optional[int] = None,
    out_dir: Optional[Union[str, Path]] = None,
    logger: Optional[CoreLoggerAPI] = None
) -> List[Dict[str, Any]]:
    """
    Run ``config`` once per seed.

    Seeds run in separate processes and share nothing; the parent alone
    writes ``summaries.json``. With ``workers=1`` the runs go through a
    worker thread instead.

    Returns:
        Summary dicts in seed order
    """
    data = config.to_dict()
    target = str(out_dir) if out_dir is not None else None
    loop = asyncio.get_running_loop()

    if logger:
        logger.log(f"Batch of {len(seeds)} seeds, workers={workers or 'auto'}", level="INFO", tag="batch")

    if workers == 1:
        summaries = []
        for seed in seeds:
            summaries.append(await asyncio.to_thread(run_seed, data, seed, target))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [loop.run_in_executor(pool, run_seed, data, seed, target) for seed in seeds]
            summaries = list(await asyncio.gather(*futures))

    if out_dir is not None:
        path = write_summaries(summaries, Path(out_dir) / config.output.summaries)
        if logger:
            logger.log(f"Wrote {path}", level="INFO", tag="batch")
    return summaries
