"""
Pytest configuration and shared fixtures.

Provides reusable contexts, fields, random matrices and instance files for
all test modules.
"""

from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import pytest

from leonard.algebra.field import FieldSpec, Scalar
from leonard.algebra.matrix import ExactMatrix
from leonard.config.settings import get_settings
from leonard.instances.generators import (
    k3_fixture,
    krawtchouk,
    random_context,
    repeated_dual_fixture,
)
from leonard.instances.sampling import random_matrix, random_scalar
from leonard.io.reports import write_json
from leonard.structure.context import Context
from leonard.utils.rng import SplitMix64


FIXTURES_DIR = Path(__file__).parent / "fixtures"

MatrixFactory = Callable[[SplitMix64, FieldSpec, int], ExactMatrix]


# =============================================================================
# Settings
# =============================================================================


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Fresh settings per test, unaffected by the caller's environment."""
    for name in ("LEONARD_REPORT_FORMAT", "LEONARD_LOG_LEVEL", "LEONARD_INCLUDE_TIMING"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# =============================================================================
# Fields
# =============================================================================


@pytest.fixture
def rational() -> FieldSpec:
    """The field Q."""
    return FieldSpec.rational()


@pytest.fixture
def gf101() -> FieldSpec:
    """GF(101)."""
    return FieldSpec.gf(101)


@pytest.fixture
def gf7() -> FieldSpec:
    """GF(7)."""
    return FieldSpec.gf(7)


# =============================================================================
# Contexts
# =============================================================================


@pytest.fixture
def krawtchouk1() -> Context:
    """Krawtchouk pair for d = 1 over Q."""
    return krawtchouk(1)


@pytest.fixture
def krawtchouk2() -> Context:
    """Krawtchouk pair for d = 2 over Q."""
    return krawtchouk(2)


@pytest.fixture
def krawtchouk3() -> Context:
    """Krawtchouk pair for d = 3 over Q; Delta is the path 0-1-2-3."""
    return krawtchouk(3)


@pytest.fixture
def krawtchouk4() -> Context:
    """Krawtchouk pair for d = 4 over Q."""
    return krawtchouk(4)


@pytest.fixture
def k3_context() -> Context:
    """Context whose Delta is the triangle."""
    return k3_fixture()


@pytest.fixture
def repeated_dual_context() -> Context:
    """Context with theta* = (0, 1, 1, 0)."""
    return repeated_dual_fixture()


@pytest.fixture
def random_gf_context() -> Context:
    """Random d = 3 context over GF(101)."""
    return random_context(3, 101, seed=7)


# =============================================================================
# Instance Files
# =============================================================================


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def instances_dir() -> Path:
    """Well-formed instances, every one carrying expectations."""
    return FIXTURES_DIR / "instances"


@pytest.fixture
def pairs_dir() -> Path:
    """Raw (A, A*) pair instances."""
    return FIXTURES_DIR / "pairs"


@pytest.fixture
def malformed_dir() -> Path:
    return FIXTURES_DIR / "malformed"


@pytest.fixture
def write_instance_file(tmp_path: Path) -> Callable[[dict[str, Any], str], Path]:
    """Factory writing an instance dict to a temporary JSON file."""

    def _write(data: dict[str, Any], name: str = "instance.json") -> Path:
        path = tmp_path / name
        write_json(path, data)
        return path

    return _write


# =============================================================================
# Random Matrices
# =============================================================================


@pytest.fixture
def invertible_matrix() -> MatrixFactory:
    """Factory drawing random n x n matrices until one is invertible."""

    def _draw(rng: SplitMix64, spec: FieldSpec, n: int) -> ExactMatrix:
        while True:
            m = random_matrix(rng, spec, n)
            if not m.determinant().is_zero():
                return m

    return _draw


@pytest.fixture
def diagonalizable_matrix(invertible_matrix: MatrixFactory) -> MatrixFactory:
    """Factory for P diag(v) P^-1 with random invertible P and distinct v."""

    def _draw(rng: SplitMix64, spec: FieldSpec, n: int) -> ExactMatrix:
        values: list[Scalar] = []
        while len(values) < n:
            candidate = random_scalar(rng, spec)
            if candidate not in values:
                values.append(candidate)
        p = invertible_matrix(rng, spec, n)
        return p @ ExactMatrix.diagonal(spec, values) @ p.inverse()

    return _draw
