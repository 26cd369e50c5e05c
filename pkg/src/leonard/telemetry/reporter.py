"""
Text rendering of reports for ``--text`` output.

Draws a boxed panel per report and a totals panel for suite runs.
"""

from collections.abc import Sequence
from typing import Any, TextIO

from leonard import __version__
from leonard.io.reports import Report
from leonard.telemetry.metrics import MetricsCollector
from leonard.utils.time import format_duration_us


class TextReporter:
    """Boxed text panel for a single report."""

    # Box drawing characters
    BOX_TL = "\u2554"  # ╔
    BOX_TR = "\u2557"  # ╗
    BOX_BL = "\u255a"  # ╚
    BOX_BR = "\u255d"  # ╝
    BOX_H = "\u2550"  # ═
    BOX_V = "\u2551"  # ║
    BOX_LT = "\u2560"  # ╠
    BOX_RT = "\u2563"  # ╣

    PASS = "ok  "
    FAIL = "FAIL"

    def __init__(self, width: int = 72) -> None:
        self._width = width

    def _pad(self, text: str, width: int) -> str:
        return text.ljust(width)[:width]

    def _line(self, content: str) -> str:
        return f"{self.BOX_V}{self._pad(content, self._width - 2)}{self.BOX_V}"

    def _divider(self) -> str:
        return f"{self.BOX_LT}{self.BOX_H * (self._width - 2)}{self.BOX_RT}"

    def _top(self) -> str:
        return f"{self.BOX_TL}{self.BOX_H * (self._width - 2)}{self.BOX_TR}"

    def _bottom(self) -> str:
        return f"{self.BOX_BL}{self.BOX_H * (self._width - 2)}{self.BOX_BR}"

    @staticmethod
    def _scalar_items(result: dict[str, Any]) -> list[tuple[str, str]]:
        """Top-level entries short enough for one line."""
        items = []
        for key in sorted(result):
            value = result[key]
            if isinstance(value, bool | int | str) and "\n" not in str(value):
                items.append((key, str(value)))
            elif isinstance(value, list) and all(isinstance(v, list | int) for v in value):
                items.append((key, str(value)))
        return items

    def render(self, report: Report) -> str:
        verdict = "PASS" if report.passed else ("NEGATIVE" if report.negative else "FAIL")
        lines = [self._top()]
        lines.append(self._line(f"  LEONARD-TAILS v{__version__} | {report.command} | {report.instance}"))
        lines.append(self._line(f"  field: {report.field_label or '-'}  |  verdict: {verdict}"))

        if report.checks.checks:
            lines.append(self._divider())
            for check in report.checks.checks:
                mark = self.PASS if check.passed else self.FAIL
                detail = f"  ({check.detail})" if check.detail else ""
                lines.append(self._line(f"  [{mark}] {check.name}{detail}"))

        items = self._scalar_items(report.result)
        if items:
            lines.append(self._divider())
            for key, value in items:
                lines.append(self._line(f"  {key}: {value}"))

        if report.warnings:
            lines.append(self._divider())
            for w in sorted(report.warnings):
                lines.append(self._line(f"  warning: {w}"))

        if report.timing:
            lines.append(self._divider())
            for name, t in sorted(report.timing.items()):
                lines.append(self._line(f"  {name}: {format_duration_us(int(t['total_us']))}"))

        lines.append(self._bottom())
        return "\n".join(lines)

    def display(self, report: Report, output: TextIO) -> None:
        output.write(self.render(report))
        output.write("\n")


class SuiteSummary:
    """Totals panel for a batch run."""

    def __init__(self, metrics: MetricsCollector) -> None:
        self._metrics = metrics

    def render(self, statuses: Sequence[tuple[str, str]]) -> str:
        """``statuses`` holds (file name, status) pairs in run order."""
        stats = self._metrics.stats
        counts: dict[str, int] = {}
        for _, status in statuses:
            counts[status] = counts.get(status, 0) + 1

        lines = ["=" * 50, "  SUITE SUMMARY", "=" * 50]
        for name, status in statuses:
            lines.append(f"  {status:<20} {name}")
        lines.append("")
        lines.append(f"  Files:                {len(statuses):,}")
        for status in ("ok", "negative", "input_error", "integrity_violation"):
            lines.append(f"  {status + ':':<22}{counts.get(status, 0):,}")
        lines.append(f"  Checks passed:        {stats.checks_passed:,}")
        lines.append(f"  Checks failed:        {stats.checks_failed:,}")
        lines.append(f"  Check pass rate:      {stats.pass_rate:.1%}")
        lines.append("=" * 50)
        return "\n".join(lines)
