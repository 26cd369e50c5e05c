"""
Reports and JSON I/O.

Everything is written with orjson using sorted keys, two-space indent
and a trailing newline, so identical inputs give byte-identical files.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import orjson
from pydantic import ValidationError

from leonard import __version__
from leonard.config.constants import EXIT_NEGATIVE, EXIT_OK, REPORT_SCHEMA_VERSION
from leonard.core.errors import InstanceFileError
from leonard.core.types import CheckReport
from leonard.io.models import InstanceFile


logger = logging.getLogger(__name__)

TOOL_NAME = "leonard-tails"


# =============================================================================
# JSON
# =============================================================================


def dumps(obj: Any) -> bytes:
    return orjson.dumps(obj, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2) + b"\n"


def write_json(path: Path, obj: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(dumps(obj))


def read_json(path: Path) -> Any:
    """
    Parse a JSON file.

    Raises:
        InstanceFileError: unreadable file or malformed JSON, with line and column.
    """
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise InstanceFileError(f"cannot read file: {e.strerror}", str(path)) from e
    try:
        return orjson.loads(raw)
    except orjson.JSONDecodeError as e:
        raise InstanceFileError(f"malformed JSON: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from e


def _describe_validation(e: ValidationError) -> str:
    parts = []
    for err in e.errors():
        loc = ".".join(str(x) for x in err["loc"]) or "<root>"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def load_instance(path: Path) -> InstanceFile:
    """
    Read and validate an instance file.

    Raises:
        InstanceFileError: malformed JSON or a schema violation.
    """
    data = read_json(path)
    try:
        instance = InstanceFile.model_validate(data)
    except ValidationError as e:
        raise InstanceFileError(_describe_validation(e), str(path)) from e
    logger.debug(f"loaded {path.name}: d={instance.d} over {instance.field_spec}")
    return instance


def write_instance(path: Path, instance: InstanceFile) -> None:
    write_json(path, instance.to_json_dict())


# =============================================================================
# Reports
# =============================================================================


@dataclass
class Report:
    """
    Output of one command on one instance.

    ``negative`` marks a mathematical verdict that is negative; it maps
    to exit code 1 without being an error.
    """

    command: str
    instance: str
    field_label: str | None = None
    checks: CheckReport = field(default_factory=CheckReport)
    result: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    negative: bool = False
    timing: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return self.checks.passed and not self.negative

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_NEGATIVE

    def warn(self, message: str) -> None:
        if message not in self.warnings:
            self.warnings.append(message)

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        body: dict[str, Any] = {
            "schema": REPORT_SCHEMA_VERSION,
            "tool": {"name": TOOL_NAME, "version": __version__},
            "command": self.command,
            "instance": self.instance,
            "field": self.field_label,
            "checks": self.checks.to_list(),
            "result": self.result,
            "warnings": sorted(self.warnings),
            "passed": self.passed,
        }
        if include_timing and self.timing is not None:
            body["timing"] = self.timing
        return body

    def to_json(self, include_timing: bool = False) -> bytes:
        return dumps(self.to_dict(include_timing))
