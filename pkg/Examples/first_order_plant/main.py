import asyncio
import sys
from pathlib import Path

# Add the main project path to sys.path
L1LAB_ROOT = Path(__file__).parent.parent.parent.resolve()
CURRENT_ROOT = Path(__file__).parent.resolve()
sys.path.insert(0, str(L1LAB_ROOT))

from l1lab import Laboratory


async def seeds_job(lab):
    """
    One run of the configured experiment, then a batch over five seeds.

    The single run lands in runs/, the batch in runs/seed_<k> plus
    runs/summaries.json.
    """
    experiment = lab.services.require("experiment_service")

    result = await experiment.run_async()
    experiment.emit(result)

    summaries = await experiment.batch(range(1, 6))
    worst = max(s["max_abs_y_steady"] for s in summaries)
    print(f"J={result.summary.J_theta:.3f} I={result.summary.I_final:.3f} worst steady max|y|={worst:.3f}")


async def main():
    """Entry point for the first-order plant example."""
    lab = Laboratory(
        settings_path="experiment.json",
        app_dir=CURRENT_ROOT,
        strict_settings=True
    )

    await lab.run(seeds_job)


if __name__ == "__main__":
    try:
        asyncio.run(main())
    except KeyboardInterrupt:
        pass
