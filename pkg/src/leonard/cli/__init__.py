"""Command-line interface."""

from leonard.cli.app import app, run


__all__ = ["app", "run"]
