"""
Experiment Module - the closed-loop harness.

Provides:
- ExperimentConfig with validation and the reference polytope
- run: the step loop with cutting, estimation and falsification
- compute_J and the run summary
- emit: trace / summary / update files
- s7_config / replicate_s7 presets and seed batches
"""

from .module import ExperimentModule
from .experiment_service import ExperimentService
from .core.config import ExperimentConfig, OutputPaths, s7_polytope, polytope_from_dict
from .core.metrics import RunStatus, Verdict, compute_J, oracle_delta, steady_max
from .core.runner import TRACE_HEADER, RunResult, RunServices, RunSummary, TraceRecord, run
from .core.emit import emit, write_trace, write_summary, write_summaries, write_updates, write_disturbance
from .core.presets import s7_config, replicate_s7
from .core.batch import run_batch, run_seed
from .core.exceptions import ExperimentError, EmitError

__version__ = "0.1.0"

__all__ = [
    # Module
    "ExperimentModule",
    # Service
    "ExperimentService",
    # Config
    "ExperimentConfig",
    "OutputPaths",
    "s7_polytope",
    "polytope_from_dict",
    # Run
    "RunStatus",
    "Verdict",
    "compute_J",
    "oracle_delta",
    "steady_max",
    "TRACE_HEADER",
    "RunResult",
    "RunServices",
    "RunSummary",
    "TraceRecord",
    "run",
    # Artefacts
    "emit",
    "write_trace",
    "write_summary",
    "write_summaries",
    "write_updates",
    "write_disturbance",
    # Presets and batches
    "s7_config",
    "replicate_s7",
    "run_batch",
    "run_seed",
    # Exceptions
    "ExperimentError",
    "EmitError",
]
