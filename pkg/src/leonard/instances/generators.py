"""
Instance generators.

Positive instances come from the Krawtchouk family and from random
irreducible tridiagonal matrices over GF(p); negative instances are
random contexts whose graph Delta has no tail at all.
"""

import logging
from collections.abc import Callable

from pydantic import BaseModel, Field, field_validator

from leonard.algebra.field import FieldSpec
from leonard.algebra.matrix import ExactMatrix
from leonard.algebra.polynomial import roots_in_field
from leonard.config.constants import DEFAULT_MAX_RETRIES, MAX_DIMENSION
from leonard.core.errors import (
    DegenerateDimensionError,
    FieldTooSmallError,
    GeneratorError,
    RetryBudgetExhaustedError,
)
from leonard.core.types import GeneratorFamily
from leonard.instances.sampling import random_scalar, random_tridiagonal
from leonard.structure.context import Context, build_context, verify_leonard_pair
from leonard.structure.delta import build_delta, is_tail
from leonard.utils.rng import SplitMix64


logger = logging.getLogger(__name__)


class GeneratorConfig(BaseModel):
    """Parameters of one generated instance."""

    family: GeneratorFamily
    d: int = Field(ge=1, le=MAX_DIMENSION - 1)
    field: str = Field(default="rational", description="rational or gfp:P")
    seed: int = Field(default=0, ge=0, lt=2**64)
    max_retries: int = Field(default=DEFAULT_MAX_RETRIES, ge=1)
    distinct_dual: bool = True

    model_config = {"frozen": True}

    @field_validator("field")
    @classmethod
    def validate_field(cls, v: str) -> str:
        return FieldSpec.from_descriptor(v).label

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.from_descriptor(self.field)


# =============================================================================
# Krawtchouk
# =============================================================================


def krawtchouk_matrices(d: int, spec: FieldSpec) -> tuple[ExactMatrix, ExactMatrix]:
    """A with A_{i,i-1} = i and A_{i-1,i} = d-i+1; A* = diag(d-2i)."""

    def entry(i: int, j: int) -> int:
        if i == j + 1:
            return i
        if j == i + 1:
            return d - j + 1
        return 0

    a = ExactMatrix.from_function(spec, d + 1, entry)
    astar = ExactMatrix.diagonal(spec, [d - 2 * i for i in range(d + 1)])
    return a, astar


def krawtchouk(d: int, spec: FieldSpec | None = None) -> Context:
    """
    Krawtchouk Leonard pair with eigenvalues ordered theta_i = d - 2i.

    Raises:
        FieldTooSmallError: theta collides or an off-diagonal entry vanishes.
    """
    spec = spec or FieldSpec.rational()
    if d < 1:
        raise DegenerateDimensionError("Krawtchouk family needs d >= 1")
    levels = [spec.element(d - 2 * i) for i in range(d + 1)]
    if len(set(levels)) != d + 1 or any(spec.element(k).is_zero() for k in range(1, d + 1)):
        raise FieldTooSmallError(f"Krawtchouk d={d} degenerates over {spec}")

    a, astar = krawtchouk_matrices(d, spec)
    ctx = build_context(a, levels, eigen_order=levels)
    if not verify_leonard_pair(a, astar).is_pair:
        raise GeneratorError(f"Krawtchouk d={d} over {spec} failed the Leonard pair check")
    return ctx


def k3_fixture() -> Context:
    """
    Rational context whose Delta is the triangle.

    Krawtchouk A for d = 2 with theta* = (0, 1, 3); every pair of
    eigenvalues is joined, so no pair is a tail.
    """
    a, _ = krawtchouk_matrices(2, FieldSpec.rational())
    return build_context(a, [0, 1, 3], eigen_order=[2, 0, -2])


def repeated_dual_fixture() -> Context:
    """
    Rational context with tails but theta*_0 = theta*_3.

    Krawtchouk A for d = 3 with theta* = (0, 1, 1, 0); Delta is the two
    edges {0, 2} and {1, 3}.
    """
    a, _ = krawtchouk_matrices(3, FieldSpec.rational())
    return build_context(a, [0, 1, 1, 0], eigen_order=[3, 1, -1, -3])


# =============================================================================
# Random Contexts
# =============================================================================


def _dual_eigenvalues(rng: SplitMix64, spec: FieldSpec, n: int, distinct: bool) -> list[int]:
    values: list[int] = []
    while len(values) < n:
        candidate = int(random_scalar(rng, spec))
        if distinct and candidate in values:
            continue
        values.append(candidate)
    return values


def _check_random_dimensions(d: int, p: int) -> None:
    if d < 1:
        raise DegenerateDimensionError("random contexts need d >= 1")
    if p < d + 1:
        raise FieldTooSmallError(f"GF({p}) has fewer than {d + 1} elements")


def _draw_context(rng: SplitMix64, spec: FieldSpec, n: int, distinct_dual: bool) -> Context | None:
    """One tridiagonal draw; None unless it splits with distinct eigenvalues."""
    a = random_tridiagonal(rng, spec, n)
    report = roots_in_field(a.char_poly())
    if not (report.splits and report.is_multiplicity_free()):
        return None
    return build_context(a, _dual_eigenvalues(rng, spec, n, distinct_dual))


def random_context(
    d: int,
    p: int,
    seed: int,
    distinct_dual: bool = True,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> Context:
    """
    Rejection-sample an irreducible tridiagonal A over GF(p) that splits.

    Raises:
        FieldTooSmallError: p < d + 1, so no multiplicity-free A exists.
        RetryBudgetExhaustedError: no sample split within ``max_retries``.
    """
    _check_random_dimensions(d, p)
    spec = FieldSpec.gf(p)
    rng = SplitMix64(seed)
    for attempt in range(1, max_retries + 1):
        ctx = _draw_context(rng, spec, d + 1, distinct_dual)
        if ctx is not None:
            logger.debug(f"random context d={d} p={p} seed={seed}: split after {attempt} attempts")
            return ctx

    raise RetryBudgetExhaustedError(f"no split sample for d={d} over GF({p}) in {max_retries} attempts")


def qualifies_as_non_example(ctx: Context) -> bool:
    """Whether no ordered pair of vertices of Delta is a tail."""
    g = build_delta(ctx)
    return not any(is_tail(g, i, j).is_tail for i in range(ctx.n) for j in range(ctx.n) if i != j)


def non_example_complete_delta(
    d: int,
    p: int,
    seed: int,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> Context:
    """
    Random context without tails, for negative fixtures.

    Splitting and tail-freeness are tested on the same draws, so at most
    ``max_retries`` tridiagonal matrices are sampled in total.

    Raises:
        RetryBudgetExhaustedError: no draw gave a split, tail-free context.
    """
    if d < 2:
        raise DegenerateDimensionError("tail-free Delta needs d >= 2")
    _check_random_dimensions(d, p)
    spec = FieldSpec.gf(p)
    rng = SplitMix64(seed)
    for attempt in range(1, max_retries + 1):
        ctx = _draw_context(rng, spec, d + 1, distinct_dual=True)
        if ctx is not None and qualifies_as_non_example(ctx):
            logger.debug(f"tail-free context d={d} p={p} found after {attempt} draws")
            return ctx

    raise RetryBudgetExhaustedError(f"no tail-free context for d={d} over GF({p}) in {max_retries} draws")


ENGINEERED_FIXTURES: dict[int, Callable[[], Context]] = {
    2: k3_fixture,
    3: repeated_dual_fixture,
}


def generate(config: GeneratorConfig) -> Context:
    """
    Dispatch on ``config.family``.

    The custom family returns the engineered rational fixtures: the
    triangle for d = 2 and the repeated dual eigenvalue for d = 3.
    """
    spec = config.field_spec
    if config.family is GeneratorFamily.KRAWTCHOUK:
        return krawtchouk(config.d, spec)
    if config.family is GeneratorFamily.CUSTOM:
        engineered = ENGINEERED_FIXTURES.get(config.d)
        if engineered is None or not spec.is_rational:
            raise GeneratorError(
                f"no engineered fixture for d={config.d} over {spec}; "
                f"available over rational: d in {sorted(ENGINEERED_FIXTURES)}"
            )
        return engineered()
    if spec.p is None:
        raise GeneratorError(f"family {config.family.value} needs a prime field")
    if config.family is GeneratorFamily.RANDOM_GFP:
        return random_context(config.d, spec.p, config.seed, config.distinct_dual, config.max_retries)
    return non_example_complete_delta(config.d, spec.p, config.seed, config.max_retries)
