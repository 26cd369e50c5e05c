"""Test suite for leonard-tails."""
