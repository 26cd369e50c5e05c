"""Unit tests for leonard components."""
