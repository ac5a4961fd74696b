"""
bench/
------
Greenlight – Comparison Front End

Modules
-------
config.py  — CompareConfig (defaults → JSON file → CLI flags)
report.py  — ComparisonReport, JSON and text renderings
runner.py  — verification, comparison, curve and report emission
cli.py     — `python -m bench` subcommands and exit codes
"""

from .config import CompareConfig, ConfigError
from .report import SCHEMA_VERSION, ComparisonReport
from .runner import (
    DecodeFailure,
    ReportIOError,
    emit_delay_curves,
    emit_power_curves,
    emit_report,
    latency_ratio,
    run_compare,
    simulate_digital,
    simulate_optical,
    verification_codewords,
    verify_codewords,
)

__all__ = [
    "CompareConfig",
    "ConfigError",
    "SCHEMA_VERSION",
    "ComparisonReport",
    "DecodeFailure",
    "ReportIOError",
    "emit_delay_curves",
    "emit_power_curves",
    "emit_report",
    "latency_ratio",
    "run_compare",
    "simulate_digital",
    "simulate_optical",
    "verification_codewords",
    "verify_codewords",
]
