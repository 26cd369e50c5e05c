#!/usr/bin/env python3
"""
Sweep Benchmark Script.

Times the exact sweeps behind the acceptance checks: context construction,
the idempotent axioms and the three-condition decision on every ordered pair.
"""

import statistics
import sys
from pathlib import Path

# Add src to path for direct execution
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from leonard.algebra.field import FieldSpec
from leonard.instances.generators import krawtchouk, random_context
from leonard.structure.qpoly import theorem_equivalence_sweep
from leonard.utils.time import LatencyTimer, format_duration_us


AXIOM_TARGET_US = 10_000_000
SWEEP_TARGET_US = 60_000_000


def _stats(latencies: list[int]) -> dict[str, float]:
    ordered = sorted(latencies)
    return {
        "min": ordered[0],
        "max": ordered[-1],
        "avg": statistics.mean(ordered),
        "p50": statistics.median(ordered),
        "total": sum(ordered),
    }


def benchmark_krawtchouk_contexts(max_d: int = 8) -> dict[str, float]:
    """Build Krawtchouk contexts over Q and check the idempotent axioms."""
    latencies: list[int] = []
    for d in range(1, max_d + 1):
        with LatencyTimer() as timer:
            ctx = krawtchouk(d)
            assert not ctx.eigen.violations()
        latencies.append(timer.latency_us)
    return _stats(latencies)


def benchmark_random_contexts(count: int = 100, max_d: int = 6, p: int = 101) -> dict[str, float]:
    """Rejection-sample random contexts over GF(p)."""
    latencies: list[int] = []
    for seed in range(count):
        d = 2 + seed % (max_d - 1)
        with LatencyTimer() as timer:
            random_context(d, p, seed=seed)
        latencies.append(timer.latency_us)
    return _stats(latencies)


def benchmark_equivalence_sweep(count: int = 100, max_d: int = 6, p: int = 101) -> dict[str, float]:
    """Decide every ordered pair on Krawtchouk d = 1..8 and on random contexts."""
    contexts = [krawtchouk(d, spec) for d in range(1, 9) for spec in (FieldSpec.rational(), FieldSpec.gf(p))]
    contexts += [random_context(2 + seed % (max_d - 1), p, seed=seed) for seed in range(count)]

    latencies: list[int] = []
    for ctx in contexts:
        with LatencyTimer() as timer:
            theorem_equivalence_sweep(ctx)
        latencies.append(timer.latency_us)
    return _stats(latencies)


def format_stats(stats: dict[str, float]) -> str:
    """Format stats for display."""
    return (
        f"min={format_duration_us(int(stats['min']))}, "
        f"avg={format_duration_us(int(stats['avg']))}, "
        f"p50={format_duration_us(int(stats['p50']))}, "
        f"max={format_duration_us(int(stats['max']))}, "
        f"total={format_duration_us(int(stats['total']))}"
    )


def main() -> int:
    """Run all benchmarks."""
    print("=" * 70)
    print("  SWEEP BENCHMARK")
    print("=" * 70)
    print()

    print("1. Krawtchouk contexts, d = 1..8 over Q")
    axioms = benchmark_krawtchouk_contexts()
    print(f"   {format_stats(axioms)}")
    print()

    print("2. Random contexts over GF(101), 100 samples, d <= 6")
    stats = benchmark_random_contexts()
    print(f"   {format_stats(stats)}")
    print()

    print("3. Equivalence sweep on every ordered pair")
    sweep = benchmark_equivalence_sweep()
    print(f"   {format_stats(sweep)}")
    print()

    print("=" * 70)
    print("  SUMMARY")
    print("=" * 70)
    print()
    print(f"Idempotent axioms: {format_duration_us(int(axioms['total']))} (target < {format_duration_us(AXIOM_TARGET_US)})")
    print(f"Equivalence sweep: {format_duration_us(int(sweep['total']))} (target < {format_duration_us(SWEEP_TARGET_US)})")
    print()

    return 0


if __name__ == "__main__":
    sys.exit(main())
