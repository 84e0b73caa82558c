"""Law harness: registered laws, exhaustive/sampled checking and counterexample hunts."""
from .registry import HarnessConfig, Law, LawReport, RunRecord, all_laws, get_law
from .runner import hunt_counterexamples, plan, run_law_suite, suite_failed

__all__ = [
    "HarnessConfig",
    "Law",
    "LawReport",
    "RunRecord",
    "all_laws",
    "get_law",
    "hunt_counterexamples",
    "plan",
    "run_law_suite",
    "suite_failed",
]
