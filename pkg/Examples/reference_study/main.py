import asyncio
import sys
from pathlib import Path

# Add the main project path to sys.path
L1LAB_ROOT = Path(__file__).parent.parent.parent.resolve()
CURRENT_ROOT = Path(__file__).parent.resolve()
sys.path.insert(0, str(L1LAB_ROOT))

from l1lab import Laboratory


async def compare(lab):
    """
    Run the adaptive and the least-squares controller on the same seed.

    Each run writes its trace, summary and update log under runs/<controller>.
    """
    experiment = lab.services.require("experiment_service")
    seed = lab.config.get("experiment.seed")
    for controller in ("adaptive", "rls"):
        result = await asyncio.to_thread(experiment.replicate, "random", controller, seed)
        experiment.emit(result, out_dir=str(CURRENT_ROOT / "runs" / controller))
        summary = result.summary
        print(f"{summary.controller:>17}: status={summary.status.value} max|y|={summary.max_abs_y:.3f} "
              f"steady max|y|={summary.max_abs_y_steady:.3f} J={summary.J_theta:.3f}")


async def main():
    """
    Entry point for the reference study example.

    Loads the bundled modules plus the update monitor from ./app and
    compares both controllers under the worst-case disturbance windows.
    """
    # Initial settings with higher priority than JSON configuration
    initial_settings = {
        # "logs": {"hide_log_levels": []},
        "experiment": {"seed": 0},
    }

    lab = Laboratory(
        initial_settings=initial_settings,
        settings_path="experiment_settings.json",
        app_dir=CURRENT_ROOT
    )

    await lab.run(compare)


if __name__ == "__main__":
    try:
        asyncio.run(main())
    except KeyboardInterrupt:
        pass
