"""
Command-line front end.

    l1lab run --config experiment.json [--seed S] [--out DIR]
    l1lab replicate-s7 --controller {adaptive,rls} --disturbance {random,trig} [--seeds N]
    l1lab norm --a a_1,...,a_n --b b_1,...,b_m [--delta-w W --delta-y Y --delta-u U]

Exit codes: 0 ok, 2 falsified, 3 unstable, 1 configuration or IO error.
"""
import argparse
import asyncio
import json
import sys
from typing import List, Optional, Sequence

from l1lab.core.app import Laboratory
from l1lab.core.exceptions import FrameworkError
from l1lab.modules.experiment import RunStatus, Verdict, compute_J, s7_config
from l1lab.modules.plant_sim import PlantParams
from l1lab.modules.poly_core import NormService, Polynomial

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FALSIFIED = 2
EXIT_UNSTABLE = 3

_STATUS_CODES = {
    RunStatus.OK.value: EXIT_OK,
    RunStatus.FALSIFIED.value: EXIT_FALSIFIED,
    RunStatus.UNSTABLE.value: EXIT_UNSTABLE,
}


def exit_code(statuses: Sequence[str]) -> int:
    """Worst outcome over runs: unstable before falsified before ok."""
    return max((_STATUS_CODES[s] for s in statuses), default=EXIT_OK)


def _floats(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _lab_settings(args) -> dict:
    settings: dict = {"logs": {"show_logs": not args.quiet}}
    if getattr(args, "seed", None) is not None:
        settings["experiment"] = {"seed": args.seed}
    if getattr(args, "out", None):
        settings["output"] = {"dir": args.out}
    if getattr(args, "workers", None):
        settings["batch"] = {"workers": args.workers}
    return settings


def _print_json(data):
    print(json.dumps(data, indent=2))


async def _cmd_run(args) -> int:
    lab = Laboratory(initial_settings=_lab_settings(args), settings_path=args.config, strict_settings=True)

    async def job(lab: Laboratory) -> int:
        service = lab.services.require("experiment_service")
        result = await service.run_async()
        service.emit(result)
        _print_json(result.summary.to_dict())
        return exit_code([result.summary.status.value])

    return await lab.run(job)


async def _cmd_replicate(args) -> int:
    lab = Laboratory(initial_settings=_lab_settings(args))
    seeds = list(range(args.seed, args.seed + args.seeds))

    async def job(lab: Laboratory) -> int:
        service = lab.services.require("experiment_service")
        if len(seeds) == 1:
            result = await asyncio.to_thread(service.replicate, args.disturbance, args.controller,
                                             seeds[0], args.horizon)
            service.emit(result)
            _print_json(result.summary.to_dict())
            return exit_code([result.summary.status.value])
        config = s7_config(args.disturbance, args.controller, seeds[0], args.horizon)
        summaries = await service.batch(seeds, config=config)
        _print_json(summaries)
        return exit_code([s["status"] for s in summaries])

    return await lab.run(job)


def _cmd_norm(args) -> int:
    xi = list(args.a) + list(args.b)
    params = PlantParams(xi=xi, n=len(args.a), delta_w=args.delta_w, delta_y=args.delta_y,
                         delta_u=args.delta_u, mu=1)
    a, b = Polynomial.from_xi(xi, len(args.a))
    impulse = NormService().impulse(a, b)
    J = compute_J(params, impulse)
    _print_json({
        "l1_norm": impulse.l1_norm,
        "tail_bound": impulse.tail_bound,
        "truncation_length": impulse.truncation_length,
        "J": None if isinstance(J, Verdict) else J,
        "verdict": J.value if isinstance(J, Verdict) else None,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="l1lab", description="Adaptive l1-optimal robust stabilization laboratory")
    parser.add_argument("--quiet", action="store_true", help="Suppress log output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="Run one experiment from a settings file")
    p_run.add_argument("--config", required=True, help="Experiment JSON file")
    p_run.add_argument("--seed", type=int, default=None, help="Override experiment.seed")
    p_run.add_argument("--out", default=None, help="Output directory")
    p_run.set_defaults(handler=_cmd_run)

    p_rep = sub.add_parser("replicate-s7", help="Run the reference closed-loop study")
    p_rep.add_argument("--controller", choices=["adaptive", "rls"], default="adaptive")
    p_rep.add_argument("--disturbance", choices=["random", "trig"], default="random")
    p_rep.add_argument("--seeds", type=int, default=1, help="Number of consecutive seeds")
    p_rep.add_argument("--seed", type=int, default=0, help="First seed")
    p_rep.add_argument("--horizon", type=int, default=2000)
    p_rep.add_argument("--workers", type=int, default=None, help="Process pool size for several seeds")
    p_rep.add_argument("--out", default=None, help="Output directory")
    p_rep.set_defaults(handler=_cmd_replicate)

    p_norm = sub.add_parser("norm", help="l1 norm of the optimal controller and J")
    p_norm.add_argument("--a", type=_floats, required=True, help="a_1,...,a_n (the leading 1 is implied)")
    p_norm.add_argument("--b", type=_floats, required=True, help="b_1,...,b_m")
    p_norm.add_argument("--delta-w", type=float, default=1.0)
    p_norm.add_argument("--delta-y", type=float, default=0.2)
    p_norm.add_argument("--delta-u", type=float, default=0.02)
    p_norm.set_defaults(handler=_cmd_norm)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if asyncio.iscoroutinefunction(args.handler):
            return asyncio.run(args.handler(args))
        return args.handler(args)
    except (FrameworkError, OSError, KeyError, json.JSONDecodeError) as e:
        print(f"l1lab: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
