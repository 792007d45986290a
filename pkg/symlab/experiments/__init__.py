"""Scan configuration, grid executors, census, baselines and exit codes."""

from symlab.experiments.baselines import baseline_label, load_baseline, store_baseline
from symlab.experiments.config import DEFAULT_CONFIG, GridPoint, ScanConfig, parse_int_list
from symlab.experiments.executor import (
    AsyncExecutor,
    PointResult,
    ScanTask,
    SequentialExecutor,
    make_executor,
)
from symlab.experiments.exit_code import ExitCodeSummary, compute_exit_code
from symlab.experiments.scan import ScanOutcome, run_scan
from symlab.experiments.survey import SURVEY_COLUMNS, IdentityCensus, run_identity_survey

__all__ = [
    "DEFAULT_CONFIG",
    "SURVEY_COLUMNS",
    "AsyncExecutor",
    "ExitCodeSummary",
    "GridPoint",
    "IdentityCensus",
    "PointResult",
    "ScanConfig",
    "ScanOutcome",
    "ScanTask",
    "SequentialExecutor",
    "baseline_label",
    "compute_exit_code",
    "load_baseline",
    "make_executor",
    "parse_int_list",
    "run_identity_survey",
    "run_scan",
    "store_baseline",
]
