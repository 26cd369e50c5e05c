"""Telemetry module for logging, metrics and text reports."""

from leonard.telemetry.logger import QueuedLogger, setup_logging
from leonard.telemetry.metrics import MetricsCollector
from leonard.telemetry.reporter import SuiteSummary, TextReporter


__all__ = [
    "MetricsCollector",
    "QueuedLogger",
    "SuiteSummary",
    "TextReporter",
    "setup_logging",
]
