"""
Metrics collection for check runs.

Tracks per-check durations and verdict counters in memory; exported
into reports only when timing is requested.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass

from leonard.utils.time import LatencyTimer


@dataclass
class LatencyStats:
    """Aggregated latency statistics."""

    min_us: int = 0
    max_us: int = 0
    avg_us: float = 0.0
    p50_us: int = 0
    total_us: int = 0
    count: int = 0


@dataclass
class VerdictStats:
    """Outcome counters for one run."""

    checks_passed: int = 0
    checks_failed: int = 0
    verdicts_positive: int = 0
    verdicts_negative: int = 0
    integrity_violations: int = 0
    input_errors: int = 0

    @property
    def pass_rate(self) -> float:
        total = self.checks_passed + self.checks_failed
        return self.checks_passed / total if total > 0 else 0.0


class MetricsCollector:
    """Collects durations and counters for one command invocation."""

    def __init__(self) -> None:
        self._latencies: dict[str, list[int]] = {}
        self._stats = VerdictStats()

    def record_latency(self, name: str, latency_us: int) -> None:
        self._latencies.setdefault(name, []).append(latency_us)

    @contextmanager
    def timed(self, name: str) -> Iterator[LatencyTimer]:
        """Time the enclosed block under ``name``."""
        timer = LatencyTimer()
        with timer:
            yield timer
        self.record_latency(name, timer.latency_us)

    def record_check(self, passed: bool) -> None:
        if passed:
            self._stats.checks_passed += 1
        else:
            self._stats.checks_failed += 1

    def record_verdict(self, positive: bool) -> None:
        if positive:
            self._stats.verdicts_positive += 1
        else:
            self._stats.verdicts_negative += 1

    def record_integrity_violation(self) -> None:
        self._stats.integrity_violations += 1

    def record_input_error(self) -> None:
        self._stats.input_errors += 1

    def get_latency_stats(self, name: str) -> LatencyStats:
        samples = self._latencies.get(name)
        if not samples:
            return LatencyStats()

        sorted_samples = sorted(samples)
        n = len(sorted_samples)
        total = sum(sorted_samples)
        return LatencyStats(
            min_us=sorted_samples[0],
            max_us=sorted_samples[-1],
            avg_us=total / n,
            p50_us=sorted_samples[n // 2],
            total_us=total,
            count=n,
        )

    def get_all_latency_stats(self) -> dict[str, LatencyStats]:
        return {name: self.get_latency_stats(name) for name in sorted(self._latencies)}

    @property
    def stats(self) -> VerdictStats:
        return self._stats

    def timing_dict(self) -> dict[str, object]:
        return {
            name: {"total_us": s.total_us, "count": s.count, "max_us": s.max_us}
            for name, s in self.get_all_latency_stats().items()
        }

    def to_dict(self) -> dict[str, object]:
        return {
            "counters": {
                "checks_passed": self._stats.checks_passed,
                "checks_failed": self._stats.checks_failed,
                "verdicts_positive": self._stats.verdicts_positive,
                "verdicts_negative": self._stats.verdicts_negative,
                "integrity_violations": self._stats.integrity_violations,
                "input_errors": self._stats.input_errors,
            },
            "latencies": self.timing_dict(),
        }

    def reset(self) -> None:
        self._latencies.clear()
        self._stats = VerdictStats()
