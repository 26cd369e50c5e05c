"""
Unit tests for JSON I/O and reports.
"""

from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from leonard import __version__
from leonard.core.errors import InstanceFileError
from leonard.io.models import InstanceFile
from leonard.io.reports import Report, dumps, load_instance, read_json, write_instance
from leonard.structure.context import Context


class TestJson:
    """Tests for the deterministic JSON writer and reader."""

    def test_sorted_indented(self) -> None:
        """Test key order, indentation and the trailing newline."""
        assert dumps({"b": 1, "a": [1, 2]}) == b'{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'

    def test_malformed_location(self, malformed_dir: Path) -> None:
        """Test that truncated JSON reports a line and column."""
        path = malformed_dir / "malformed.json"
        with pytest.raises(InstanceFileError) as exc_info:
            read_json(path)
        assert exc_info.value.location.startswith(f"{path}:")
        assert "malformed JSON" in exc_info.value.message

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test an unreadable path."""
        with pytest.raises(InstanceFileError) as exc_info:
            read_json(tmp_path / "absent.json")
        assert "cannot read file" in exc_info.value.message


class TestLoadInstance:
    """Tests for load_instance and write_instance."""

    def test_wrong_shape(self, malformed_dir: Path) -> None:
        """Test that schema errors name the offending field."""
        with pytest.raises(InstanceFileError) as exc_info:
            load_instance(malformed_dir / "wrong_shape.json")
        assert "A must be 3x3" in exc_info.value.message
        assert exc_info.value.code == "input_error"

    def test_write_then_load(self, krawtchouk2: Context, tmp_path: Path) -> None:
        """Test that a written instance loads to the same context."""
        path = tmp_path / "out" / "k2.json"
        write_instance(path, InstanceFile.from_context(krawtchouk2, name="k2"))
        assert load_instance(path).to_context().A == krawtchouk2.A
        assert path.read_bytes().endswith(b"}\n")

    def test_factory(self, write_instance_file: Callable[[dict[str, Any], str], Path]) -> None:
        """Test the temporary instance factory."""
        path = write_instance_file(
            {"schema": 1, "field": "gfp:7", "d": 1, "A": [[0, 1], [1, 0]], "theta_star": [1, 2]}, "tiny.json"
        )
        assert load_instance(path).field_spec.p == 7


class TestReport:
    """Tests for the Report record."""

    def test_exit_codes(self) -> None:
        """Test passing, failing and negative reports."""
        report = Report(command="verify", instance="x.json")
        assert report.exit_code == 0
        report.checks.add("leonard_pair", False)
        assert report.exit_code == 1

        negative = Report(command="decide", instance="x.json", negative=True)
        assert not negative.passed
        assert negative.exit_code == 1

    def test_warnings_deduplicated(self) -> None:
        """Test that warnings are kept once and sorted in output."""
        report = Report(command="decide", instance="x.json")
        report.warn("b")
        report.warn("a")
        report.warn("b")
        assert report.to_dict()["warnings"] == ["a", "b"]

    def test_body(self) -> None:
        """Test the schema, tool and timing fields."""
        report = Report(command="delta", instance="x.json", field_label="rational", timing={"total_us": 5})
        body = report.to_dict()
        assert body["schema"] == 1
        assert body["tool"] == {"name": "leonard-tails", "version": __version__}
        assert body["field"] == "rational"
        assert "timing" not in body
        assert report.to_dict(include_timing=True)["timing"] == {"total_us": 5}
        assert report.to_json().endswith(b"\n")
