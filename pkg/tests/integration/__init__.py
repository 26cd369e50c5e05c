"""Integration tests for the CLI and the acceptance sweeps."""
