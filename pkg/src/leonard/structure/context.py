"""
Validated Leonard contexts and Leonard pair/system verification.

The canonical model places the dual eigenbasis at the standard basis:
the dual idempotents E*_i are coordinate projections, A* = diag(theta*)
and A itself is irreducible tridiagonal. Raw (A, A*) pairs are rotated
into this model by ``context_from_pair``.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from leonard.algebra.field import FieldElement, FieldSpec
from leonard.algebra.matrix import (
    BasisChange,
    ExactMatrix,
    is_irreducible_tridiagonal,
    represent,
)
from leonard.algebra.polynomial import ExactPolynomial
from leonard.algebra.spectral import EigenData, IdempotentSystem, eigen_split, line_of
from leonard.core.errors import (
    DegenerateDimensionError,
    DimensionMismatchError,
    NotMultiplicityFreeError,
    NotSplitError,
    ShapeViolationError,
)
from leonard.core.types import LeonardFailure
from leonard.structure.paths import path_traversals


logger = logging.getLogger(__name__)


# =============================================================================
# Context
# =============================================================================


def _as_element(spec: FieldSpec, x: Any) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, str):
        return FieldElement(spec, spec.parse_raw(x))
    return spec.element(x)


@dataclass(slots=True, frozen=True)
class Context:
    """
    A, its eigen-data, the dual idempotents and A* = sum theta*_i E*_i.

    Everything is expressed in the dual eigenbasis. theta* may repeat.
    """

    field: FieldSpec
    d: int
    A: ExactMatrix
    dual_idempotents: IdempotentSystem
    dual_eigenvalues: tuple[FieldElement, ...]
    Astar: ExactMatrix
    eigen: EigenData

    @property
    def n(self) -> int:
        return self.d + 1

    @property
    def theta(self) -> tuple[FieldElement, ...]:
        return self.eigen.eigenvalues

    @property
    def theta_star(self) -> tuple[FieldElement, ...]:
        return self.dual_eigenvalues

    def E(self, i: int) -> ExactMatrix:
        return self.eigen.idempotents[i]

    def Estar(self, i: int) -> ExactMatrix:
        return self.dual_idempotents[i]

    def dual_shape_holds(self) -> bool:
        """E*_i A E*_j is zero for |i-j| > 1 and nonzero for |i-j| = 1."""
        for i in range(self.n):
            for j in range(self.n):
                block = self.Estar(i) @ self.A @ self.Estar(j)
                gap = abs(i - j)
                if gap > 1 and not block.is_zero():
                    return False
                if gap == 1 and block.is_zero():
                    return False
        return True

    def has_distinct_dual_eigenvalues(self) -> bool:
        return len(set(self.dual_eigenvalues)) == len(self.dual_eigenvalues)

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": self.field.label,
            "d": self.d,
            "A": self.A.to_text(),
            "theta_star": [t.render() for t in self.dual_eigenvalues],
            "theta": [t.render() for t in self.theta],
        }


def build_context(
    a: ExactMatrix,
    theta_star: Sequence[Any],
    eigen_order: Sequence[Any] | None = None,
) -> Context:
    """
    Validate A (written in the dual eigenbasis) against theta*.

    Raises:
        DegenerateDimensionError: d = 0.
        ShapeViolationError: A is not irreducible tridiagonal.
        NotSplitError, NotMultiplicityFreeError: from the eigen split of A.
    """
    spec = a.spec
    if a.n < 2:
        raise DegenerateDimensionError("context needs d >= 1")
    if len(theta_star) != a.n:
        raise DimensionMismatchError(f"{len(theta_star)} dual eigenvalues for a {a.n}x{a.n} matrix")
    if not is_irreducible_tridiagonal(a):
        raise ShapeViolationError("A is not irreducible tridiagonal in the dual eigenbasis")

    dual = tuple(_as_element(spec, x) for x in theta_star)
    dual_idempotents = IdempotentSystem(tuple(ExactMatrix.unit(spec, a.n, i, i) for i in range(a.n)))
    astar = ExactMatrix.diagonal(spec, dual)

    order = None
    if eigen_order is not None:
        order = [_as_element(spec, x) for x in eigen_order]
    eigen = eigen_split(a, order)

    logger.debug(f"context d={a.n - 1} over {spec}")
    return Context(
        field=spec,
        d=a.n - 1,
        A=a,
        dual_idempotents=dual_idempotents,
        dual_eigenvalues=dual,
        Astar=astar,
        eigen=eigen,
    )


def relabel_context(ctx: Context, ordering: Sequence[int]) -> Context:
    """Same context with A's primitive idempotents listed in ``ordering``."""
    if sorted(ordering) != list(range(ctx.n)):
        raise DimensionMismatchError(f"{list(ordering)} is not a permutation of 0..{ctx.d}")
    return Context(
        field=ctx.field,
        d=ctx.d,
        A=ctx.A,
        dual_idempotents=ctx.dual_idempotents,
        dual_eigenvalues=ctx.dual_eigenvalues,
        Astar=ctx.Astar,
        eigen=ctx.eigen.reordered(ordering),
    )


def minimal_polynomial_check(ctx: Context) -> bool:
    """Whether the minimal polynomial of A* is prod (x - theta*_i)."""
    expected = ExactPolynomial.from_roots(ctx.field, (t.value for t in ctx.dual_eigenvalues))
    return ctx.Astar.minimal_polynomial() == expected


# =============================================================================
# Leonard Pair / System Verdicts
# =============================================================================


@dataclass(slots=True, frozen=True)
class LeonardVerdict:
    """
    Outcome of a Leonard pair or Leonard system check.

    ``witness_basis_A`` is an A*-eigenbasis in which A is irreducible
    tridiagonal; ``witness_basis_Astar`` is an A-eigenbasis in which A*
    is irreducible tridiagonal.
    """

    is_pair: bool
    is_system: bool
    failure_reason: LeonardFailure = LeonardFailure.NONE
    witness_basis_A: BasisChange | None = None
    witness_basis_Astar: BasisChange | None = None
    witness_order_A: tuple[int, ...] | None = None
    witness_order_Astar: tuple[int, ...] | None = None
    failed_conditions: tuple[LeonardFailure, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.is_system and not self.is_pair:
            raise ValueError("a Leonard system verdict implies a Leonard pair")

    def to_dict(self) -> dict[str, Any]:
        return {
            "is_pair": self.is_pair,
            "is_system": self.is_system,
            "failure_reason": self.failure_reason.value,
            "failed_conditions": [f.value for f in self.failed_conditions],
            "witness_order_A": list(self.witness_order_A) if self.witness_order_A else None,
            "witness_order_Astar": list(self.witness_order_Astar) if self.witness_order_Astar else None,
        }


def _tridiagonalizing_basis(
    x: ExactMatrix, y: ExactMatrix
) -> tuple[BasisChange, tuple[int, ...]] | None:
    """
    Order the eigenlines of ``y`` so that ``x`` becomes irreducible tridiagonal.

    Works on the support graph of ``x`` in the eigenbasis of ``y``: the
    reordering exists iff that graph is a path whose edges carry nonzero
    entries in both directions.
    """
    eig = eigen_split(y)
    lines = [[v.value for v in line_of(e)] for e in eig.idempotents.members]
    m = represent(x, BasisChange.from_columns(x.spec, lines))

    support = nx.Graph()
    support.add_nodes_from(range(m.n))
    for i in range(m.n):
        for j in range(i + 1, m.n):
            if m.raw(i, j) != 0 or m.raw(j, i) != 0:
                support.add_edge(i, j)

    traversals = path_traversals(support)
    if not traversals:
        return None
    if any(m.raw(i, j) == 0 or m.raw(j, i) == 0 for i, j in support.edges):
        return None
    order = traversals[0]
    return BasisChange.from_columns(x.spec, [lines[k] for k in order]), order


def verify_leonard_pair(a: ExactMatrix, astar: ExactMatrix) -> LeonardVerdict:
    """
    Decide whether (A, A*) is a Leonard pair.

    Each operator must be irreducible tridiagonal in some eigenbasis of
    the other. Operators that are not multiplicity-free are rejected
    with their own failure reason.
    """
    if a.spec != astar.spec:
        return LeonardVerdict(False, False, LeonardFailure.FIELD_MISMATCH)
    if a.n != astar.n:
        return LeonardVerdict(False, False, LeonardFailure.DIMENSION_MISMATCH)
    if a.n == 1:
        eye = BasisChange.identity(a.spec, 1)
        return LeonardVerdict(True, False, witness_basis_A=eye, witness_basis_Astar=eye,
                              witness_order_A=(0,), witness_order_Astar=(0,))

    try:
        first = _tridiagonalizing_basis(a, astar)
    except NotSplitError:
        return LeonardVerdict(False, False, LeonardFailure.ASTAR_NOT_SPLIT)
    except NotMultiplicityFreeError:
        return LeonardVerdict(False, False, LeonardFailure.ASTAR_NOT_MULTIPLICITY_FREE)
    if first is None:
        return LeonardVerdict(False, False, LeonardFailure.A_NOT_TRIDIAGONALIZABLE)

    try:
        second = _tridiagonalizing_basis(astar, a)
    except NotSplitError:
        return LeonardVerdict(False, False, LeonardFailure.A_NOT_SPLIT)
    except NotMultiplicityFreeError:
        return LeonardVerdict(False, False, LeonardFailure.A_NOT_MULTIPLICITY_FREE)
    if second is None:
        return LeonardVerdict(False, False, LeonardFailure.ASTAR_NOT_TRIDIAGONALIZABLE)

    logger.debug(f"Leonard pair witnesses: A* lines {first[1]}, A lines {second[1]}")
    return LeonardVerdict(
        is_pair=True,
        is_system=False,
        witness_basis_A=first[0],
        witness_basis_Astar=second[0],
        witness_order_A=first[1],
        witness_order_Astar=second[1],
    )


def context_from_pair(a: ExactMatrix, astar: ExactMatrix) -> Context:
    """Rotate a Leonard pair into the canonical model."""
    verdict = verify_leonard_pair(a, astar)
    if not verdict.is_pair or verdict.witness_basis_A is None:
        raise ShapeViolationError(f"not a Leonard pair: {verdict.failure_reason.value}")
    basis = verdict.witness_basis_A
    rotated = represent(a, basis)
    dual = represent(astar, basis).diagonal_entries()
    return build_context(rotated, dual)


def _pattern_holds(blocks: list[list[ExactMatrix]]) -> bool:
    n = len(blocks)
    for i in range(n):
        for j in range(n):
            gap = abs(i - j)
            zero = blocks[i][j].is_zero()
            if (gap > 1 and not zero) or (gap == 1 and zero):
                return False
    return True


def _admits_system(ctx: Context, known: bool | None) -> bool:
    return known if known is not None else verify_leonard_pair(ctx.A, ctx.Astar).is_pair


def verify_leonard_system(
    ctx: Context, ordering: Sequence[int], *, is_pair: bool | None = None
) -> LeonardVerdict:
    """
    Check the five Leonard system conditions for A's idempotents in ``ordering``.

    (i) A and A* multiplicity-free, (ii) the E_i order A's primitive
    idempotents, (iii) the E*_i order those of A*, (iv) the E*_i A E*_j
    pattern, (v) the E_i A* E_j pattern.

    The verdict's ``is_pair`` reports whether (A, A*) admits some Leonard
    system, so a rejected ordering of a Leonard pair still has it set.
    Callers looping over orderings may pass the pair verdict as ``is_pair``.
    """
    if sorted(ordering) != list(range(ctx.n)):
        return LeonardVerdict(_admits_system(ctx, is_pair), False, LeonardFailure.INVALID_ORDERING,
                              failed_conditions=(LeonardFailure.INVALID_ORDERING,))

    failed: list[LeonardFailure] = []
    distinct_dual = ctx.has_distinct_dual_eigenvalues()
    if not distinct_dual:
        failed.append(LeonardFailure.MULTIPLICITY)

    idempotents = [ctx.E(k) for k in ordering]
    theta = [ctx.theta[k] for k in ordering]
    if any(ctx.A @ e != e.scale(t) for e, t in zip(idempotents, theta, strict=True)):
        failed.append(LeonardFailure.A_ORDERING)

    if not distinct_dual:
        failed.append(LeonardFailure.ASTAR_ORDERING)

    if not ctx.dual_shape_holds():
        failed.append(LeonardFailure.DUAL_PATTERN)

    astar_e = [ctx.Astar @ e for e in idempotents]
    blocks = [[e_i @ ae_j for ae_j in astar_e] for e_i in idempotents]
    if not _pattern_holds(blocks):
        failed.append(LeonardFailure.PRIMARY_PATTERN)

    ok = not failed
    logger.debug(f"Leonard system check for ordering {tuple(ordering)}: {'pass' if ok else failed[0].value}")
    return LeonardVerdict(
        is_pair=ok or _admits_system(ctx, is_pair),
        is_system=ok,
        failure_reason=failed[0] if failed else LeonardFailure.NONE,
        witness_order_Astar=tuple(ordering) if ok else None,
        failed_conditions=tuple(failed),
    )
