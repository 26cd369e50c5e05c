"""Utility modules: deterministic randomness, primality and timing."""

from leonard.utils.primes import is_prime
from leonard.utils.rng import SplitMix64
from leonard.utils.time import LatencyTimer, format_duration_us, get_monotonic_us


__all__ = [
    "LatencyTimer",
    "SplitMix64",
    "format_duration_us",
    "get_monotonic_us",
    "is_prime",
]
