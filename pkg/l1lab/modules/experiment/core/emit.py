"""
Run artefacts: trace CSV, summary JSON, the estimate-update CSV and the
disturbance series.
"""
import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from l1lab.modules.plant_sim import write_sequence
from l1lab.modules.set_estimator import UpdateEntry

from .config import OutputPaths
from .exceptions import EmitError
from .runner import TRACE_HEADER, RunResult, RunSummary, TraceRecord

PathLike = Union[str, Path]


def _prepare(path: PathLike) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise EmitError(f"Cannot create directory ({e.strerror})", path.parent) from e
    return path


def write_trace(trace: Iterable[TraceRecord], path: PathLike) -> Path:
    """CSV with header t,y,u,v,p,eta,update,cut,eps,I_zeta; floats in round-trip repr."""
    path = _prepare(path)
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(TRACE_HEADER)
            for record in trace:
                writer.writerow(record.csv_row())
    except OSError as e:
        raise EmitError(f"Cannot write trace ({e.strerror})", path) from e
    return path


def update_header(dim: int) -> List[str]:
    if dim < 2:
        return ["t", "eps", "I_zeta"]
    return ["t", "eps", "I_zeta"] + [f"xi_{i + 1}" for i in range(dim - 2)] + ["delta_w_hat", "delta_hat"]


def write_updates(updates: Sequence[UpdateEntry], path: PathLike) -> Path:
    """One row per estimate (the initial one included) with the full ζ."""
    path = _prepare(path)
    dim = len(updates[0].zeta) if updates else 0
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(update_header(dim))
            for entry in updates:
                writer.writerow([str(entry.t), repr(float(entry.eps)), repr(float(entry.criterion))]
                                + [repr(float(z)) for z in entry.zeta])
    except OSError as e:
        raise EmitError(f"Cannot write update log ({e.strerror})", path) from e
    return path


def write_disturbance(values: Sequence[float], path: PathLike) -> Path:
    """The v series as a one-column CSV that a custom_sequence disturbance replays."""
    path = _prepare(path)
    try:
        write_sequence(str(path), values)
    except OSError as e:
        raise EmitError(f"Cannot write disturbance ({e.strerror})", path) from e
    return path


def write_json(data: Any, path: PathLike) -> Path:
    path = _prepare(path)
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2)
            f.write("\n")
    except OSError as e:
        raise EmitError(f"Cannot write JSON ({e.strerror})", path) from e
    return path


def write_summary(summary: RunSummary, path: PathLike) -> Path:
    return write_json(summary.to_dict(), path)


def write_summaries(summaries: Sequence[Union[RunSummary, Dict[str, Any]]], path: PathLike) -> Path:
    """JSON array of run summaries."""
    rows = [s.to_dict() if isinstance(s, RunSummary) else s for s in summaries]
    return write_json(rows, path)


def emit(result: RunResult, out_dir: PathLike, names: Optional[OutputPaths] = None) -> Dict[str, Path]:
    """
    Write trace, summary, updates and the disturbance series of a run into ``out_dir``.

    Returns:
        Written paths by artefact name

    Raises:
        EmitError: a file or directory could not be written
    """
    names = names or OutputPaths()
    out_dir = Path(out_dir)
    return {
        "trace": write_trace(result.trace, out_dir / names.trace),
        "summary": write_summary(result.summary, out_dir / names.summary),
        "updates": write_updates(result.updates, out_dir / names.updates),
        "disturbance": write_disturbance(result.disturbance, out_dir / names.disturbance),
    }
