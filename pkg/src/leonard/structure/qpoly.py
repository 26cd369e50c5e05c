"""
Deciding whether an ordered pair of primitive idempotents is Q-polynomial.

The decision uses three conditions on the pair (E_i, E_j):

1. (E_i, E_j) is a tail of Delta.
2. Some beta makes theta*_{k-1} - beta theta*_k + theta*_{k+1} independent
   of k for 1 <= k <= d-1.
3. theta*_0 differs from every other theta*_k.

Every decision is cross-checked against the direct route (Delta is a
path starting i, j whose ordering gives a Leonard system); a disagreement
is an integrity failure.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from leonard.algebra.field import FieldElement
from leonard.algebra.matrix import ExactMatrix
from leonard.config.constants import CANONICAL_BETA, CANONICAL_GAMMA_STAR
from leonard.core.errors import (
    ContextError,
    DegenerateDimensionError,
    IdentityViolationError,
    InconsistentRecurrenceError,
    OracleDisagreementError,
    ZeroDivisionFieldError,
)
from leonard.core.types import BetaStatus
from leonard.structure.context import Context, verify_leonard_system
from leonard.structure.delta import (
    DeltaGraph,
    TailReport,
    _check_pair,
    build_delta,
    is_tail,
    q_polynomial_certificates,
)


logger = logging.getLogger(__name__)

FAIL_TAIL_I = "tail_clause_i"
FAIL_TAIL_II = "tail_clause_ii"
FAIL_BETA = "beta_no_solution"
FAIL_DUAL_REPEAT = "theta_star_0_repeated"

WARN_CHAR_2 = "characteristic_2"
WARN_NON_ADJACENT_TAIL = "non_adjacent_tail"


# =============================================================================
# Recurrences
# =============================================================================


@dataclass(slots=True, frozen=True)
class RecurrenceData:
    """
    beta, gamma* and delta* for a dual eigenvalue sequence.

    ``canonical`` marks constants fixed by convention because the
    recurrence left beta unconstrained.
    """

    status: BetaStatus
    beta: FieldElement | None = None
    gamma_star: FieldElement | None = None
    delta_star: FieldElement | None = None
    p_values: tuple[FieldElement, ...] = ()
    canonical: bool = False

    @property
    def is_concrete(self) -> bool:
        return self.beta is not None and self.gamma_star is not None and self.delta_star is not None

    def beta_label(self) -> str:
        if self.status is BetaStatus.SOLVED and self.beta is not None:
            return self.beta.render()
        return self.status.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "beta": self.beta_label(),
            "beta_used": self.beta.render() if self.beta is not None else None,
            "gamma_star": self.gamma_star.render() if self.gamma_star is not None else None,
            "delta_star": self.delta_star.render() if self.delta_star is not None else None,
            "canonical": self.canonical,
        }


def _recurrence_value(theta_star: Sequence[FieldElement], beta: FieldElement, i: int) -> FieldElement:
    return theta_star[i - 1] - beta * theta_star[i] + theta_star[i + 1]


def beta_solve(theta_star: Sequence[FieldElement]) -> RecurrenceData:
    """
    Solve for beta from consecutive differences of the three-term expression.

    Equation k (1 <= k <= d-2) reads
    beta (theta*_{k+1} - theta*_k) = theta*_k + theta*_{k+2} - theta*_{k-1} - theta*_{k+1}.
    """
    d = len(theta_star) - 1
    if d < 1:
        raise DegenerateDimensionError("beta needs d >= 1")
    solution: FieldElement | None = None
    for k in range(1, d - 1):
        coefficient = theta_star[k + 1] - theta_star[k]
        rhs = theta_star[k] + theta_star[k + 2] - theta_star[k - 1] - theta_star[k + 1]
        if coefficient.is_zero():
            if not rhs.is_zero():
                return RecurrenceData(BetaStatus.NO_SOLUTION)
            continue
        candidate = rhs / coefficient
        if solution is not None and candidate != solution:
            return RecurrenceData(BetaStatus.NO_SOLUTION)
        solution = candidate
    if solution is None:
        return RecurrenceData(BetaStatus.UNCONSTRAINED)
    return RecurrenceData(BetaStatus.SOLVED, beta=solution)


def gamma_delta(theta_star: Sequence[FieldElement], beta: FieldElement | None = None) -> RecurrenceData:
    """
    gamma* and delta* for a concrete beta.

    Without ``beta`` the recurrence is solved first; an unconstrained beta
    is fixed at 2, and gamma* at 0 when d = 1. delta* is p_1 where
    p_k = theta*_{k-1}^2 - beta theta*_{k-1} theta*_k + theta*_k^2 - gamma* (theta*_{k-1} + theta*_k).

    Raises:
        InconsistentRecurrenceError: a supplied beta does not fit.
        IdentityViolationError: the p_k telescoping identity fails.
    """
    d = len(theta_star) - 1
    spec = theta_star[0].spec
    status = BetaStatus.SOLVED
    canonical = False
    if beta is None:
        solved = beta_solve(theta_star)
        if solved.status is BetaStatus.NO_SOLUTION:
            return solved
        status = solved.status
        if solved.beta is None:
            beta = spec.element(CANONICAL_BETA)
            canonical = True
        else:
            beta = solved.beta

    if d == 1:
        gamma = spec.element(CANONICAL_GAMMA_STAR)
        canonical = True
    else:
        gamma = _recurrence_value(theta_star, beta, 1)
        for k in range(2, d):
            if _recurrence_value(theta_star, beta, k) != gamma:
                raise InconsistentRecurrenceError(f"beta = {beta} leaves the recurrence non-constant at k = {k}")

    p_values = tuple(
        theta_star[k - 1] * theta_star[k - 1]
        - beta * theta_star[k - 1] * theta_star[k]
        + theta_star[k] * theta_star[k]
        - gamma * (theta_star[k - 1] + theta_star[k])
        for k in range(1, d + 1)
    )
    for k in range(1, d):
        residual = _recurrence_value(theta_star, beta, k) - gamma
        if p_values[k - 1] - p_values[k] != (theta_star[k - 1] - theta_star[k + 1]) * residual:
            raise IdentityViolationError(f"telescoping identity fails at k = {k}")
    if any(p != p_values[0] for p in p_values):
        raise IdentityViolationError("p_k is not constant")

    return RecurrenceData(
        status=status,
        beta=beta,
        gamma_star=gamma,
        delta_star=p_values[0],
        p_values=p_values,
        canonical=canonical,
    )


def bracket_matrix(ctx: Context, rec: RecurrenceData) -> ExactMatrix:
    """[A*, A*^2 A - beta A* A A* + A A*^2 - gamma* (A A* + A* A) - delta* A]."""
    if not rec.is_concrete:
        raise InconsistentRecurrenceError("bracket needs concrete beta, gamma*, delta*")
    assert rec.beta is not None and rec.gamma_star is not None and rec.delta_star is not None
    a, s = ctx.A, ctx.Astar
    inner = (
        s @ s @ a
        - (s @ a @ s).scale(rec.beta)
        + a @ s @ s
        - (a @ s + s @ a).scale(rec.gamma_star)
        - a.scale(rec.delta_star)
    )
    return s @ inner - inner @ s


def bracket_identity_check(ctx: Context, rec: RecurrenceData) -> bool:
    return bracket_matrix(ctx, rec).is_zero()


# =============================================================================
# Length-3 Paths
# =============================================================================


@dataclass(slots=True, frozen=True)
class PathQuadruple:
    path: tuple[int, int, int, int]
    relation_holds: bool
    product_nonzero: bool

    @property
    def passed(self) -> bool:
        return self.relation_holds and self.product_nonzero

    def to_dict(self) -> dict[str, Any]:
        return {
            "path": list(self.path),
            "relation_holds": self.relation_holds,
            "product_nonzero": self.product_nonzero,
        }


@dataclass(slots=True)
class PathRelationReport:
    quadruples: list[PathQuadruple] = field(default_factory=list)
    applicable: bool = True

    @property
    def passed(self) -> bool:
        return all(q.passed for q in self.quadruples)

    def to_dict(self) -> dict[str, Any]:
        return {
            "applicable": self.applicable,
            "passed": self.passed,
            "quadruples": [q.to_dict() for q in self.quadruples],
        }


def unique_length3_paths(g: DeltaGraph) -> list[tuple[int, int, int, int]]:
    """(i, r, s, j) for ordered pairs at distance 3 joined by exactly one such path."""
    found = []
    for i in range(g.n_vertices):
        n_i = g.neighbors(i)
        for j in range(g.n_vertices):
            if j == i or g.adjacent(i, j) or n_i & g.neighbors(j):
                continue
            paths = [
                (i, r, s, j)
                for r in sorted(n_i)
                for s in sorted(g.neighbors(r) & g.neighbors(j))
                if len({i, r, s, j}) == 4
            ]
            if len(paths) == 1:
                found.append(paths[0])
    return found


def path_relation_check(ctx: Context, rec: RecurrenceData, g: DeltaGraph | None = None) -> PathRelationReport:
    """
    theta_i - (beta+1) theta_r + (beta+1) theta_s - theta_j = 0 on unique length-3 paths.

    Also checks E_i A* E_r A* E_s A* E_j != 0 for each path.
    """
    if rec.beta is None:
        return PathRelationReport(applicable=False)
    delta = g if g is not None else build_delta(ctx)
    step = rec.beta + 1
    theta = ctx.theta
    report = PathRelationReport()
    for i, r, s, j in unique_length3_paths(delta):
        relation = theta[i] - step * theta[r] + step * theta[s] - theta[j]
        product = ctx.E(i) @ ctx.Astar @ ctx.E(r) @ ctx.Astar @ ctx.E(s) @ ctx.Astar @ ctx.E(j)
        report.quadruples.append(PathQuadruple((i, r, s, j), relation.is_zero(), not product.is_zero()))
    return report


# =============================================================================
# Decision
# =============================================================================


@dataclass(slots=True, frozen=True)
class QPolyVerdict:
    """
    Decision for one ordered pair.

    ``qpoly`` is tail and recurrence_ok and condition_iii; ``ordering`` is
    the Q-polynomial ordering when positive, ``failure`` the first failed
    condition otherwise.
    """

    pair: tuple[int, int]
    tail: bool
    tail_report: TailReport
    recurrence: RecurrenceData
    recurrence_ok: bool
    condition_iii: bool
    qpoly: bool
    ordering: tuple[int, ...] | None
    failure: str | None
    oracle_agrees: bool
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        rec = self.recurrence
        return {
            "pair": list(self.pair),
            "tail": self.tail,
            "beta": rec.beta_label(),
            "gamma_star": rec.gamma_star.render() if rec.gamma_star is not None else None,
            "delta_star": rec.delta_star.render() if rec.delta_star is not None else None,
            "condition_iii": self.condition_iii,
            "qpoly": self.qpoly,
            "ordering": list(self.ordering) if self.ordering is not None else None,
            "failure": self.failure,
            "oracle_agrees": self.oracle_agrees,
            "warnings": list(self.warnings),
        }


def condition_iii(ctx: Context) -> bool:
    """theta*_0 != theta*_k for 1 <= k <= d."""
    first = ctx.theta_star[0]
    return all(t != first for t in ctx.theta_star[1:])


def dual_idempotent_from_astar(ctx: Context) -> ExactMatrix:
    """
    E*_0 as the polynomial prod_{k>=1} (A* - theta*_k I) / (theta*_0 - theta*_k).

    Raises:
        ZeroDivisionFieldError: theta*_0 repeats.
    """
    if not condition_iii(ctx):
        raise ZeroDivisionFieldError("theta*_0 repeats; E*_0 is not a polynomial of this form")
    identity = ExactMatrix.identity(ctx.field, ctx.n)
    result = identity
    for t in ctx.theta_star[1:]:
        result = result @ (ctx.Astar - identity.scale(t)).scale((ctx.theta_star[0] - t).inv())
    return result


def decide(
    ctx: Context,
    pair: tuple[int, int],
    g: DeltaGraph | None = None,
    certificates: dict[tuple[int, int], tuple[int, ...]] | None = None,
) -> QPolyVerdict:
    """
    Decide whether (E_i, E_j) is Q-polynomial.

    Raises:
        OracleDisagreementError: the three conditions and the direct route differ.
    """
    delta = g if g is not None else build_delta(ctx)
    i, j = pair
    _check_pair(delta, i, j)

    tail = is_tail(delta, i, j)
    recurrence = gamma_delta(ctx.theta_star)
    recurrence_ok = recurrence.status is not BetaStatus.NO_SOLUTION
    cond_iii = condition_iii(ctx)
    qpoly = tail.is_tail and recurrence_ok and cond_iii

    certs = certificates if certificates is not None else q_polynomial_certificates(ctx, delta)
    oracle = (i, j) in certs
    if qpoly != oracle:
        logger.error(f"pair ({i}, {j}): conditions say {qpoly}, Delta-path route says {oracle}")
        raise OracleDisagreementError(f"decision and oracle disagree on pair ({i}, {j})", (i, j))

    failure = None
    if not tail.clause_i:
        failure = FAIL_TAIL_I
    elif not tail.clause_ii:
        failure = FAIL_TAIL_II
    elif not recurrence_ok:
        failure = FAIL_BETA
    elif not cond_iii:
        failure = FAIL_DUAL_REPEAT

    warnings = []
    if ctx.field.characteristic() == 2:
        warnings.append(WARN_CHAR_2)
    if tail.non_adjacent_tail:
        warnings.append(WARN_NON_ADJACENT_TAIL)

    return QPolyVerdict(
        pair=(i, j),
        tail=tail.is_tail,
        tail_report=tail,
        recurrence=recurrence,
        recurrence_ok=recurrence_ok,
        condition_iii=cond_iii,
        qpoly=qpoly,
        ordering=certs.get((i, j)),
        failure=failure,
        oracle_agrees=True,
        warnings=tuple(warnings),
    )


@dataclass(slots=True)
class SweepReport:
    verdicts: list[QPolyVerdict] = field(default_factory=list)

    @property
    def positive_pairs(self) -> list[tuple[int, int]]:
        return [v.pair for v in self.verdicts if v.qpoly]

    @property
    def all_agree(self) -> bool:
        return all(v.oracle_agrees for v in self.verdicts)

    def to_dict(self) -> dict[str, Any]:
        return {
            "positive_pairs": [list(p) for p in self.positive_pairs],
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def theorem_equivalence_sweep(ctx: Context, g: DeltaGraph | None = None) -> SweepReport:
    """decide on every ordered pair of distinct vertices."""
    delta = g if g is not None else build_delta(ctx)
    certs = q_polynomial_certificates(ctx, delta)
    report = SweepReport()
    for i in range(ctx.n):
        for j in range(ctx.n):
            if i != j:
                report.verdicts.append(decide(ctx, (i, j), delta, certs))
    logger.debug(f"sweep d={ctx.d}: {len(report.positive_pairs)} positive of {len(report.verdicts)}")
    return report


def theta_beta_crosscheck(ctx: Context, ordering: Sequence[int]) -> bool:
    """
    Whether the beta of theta* also makes the theta recurrence constant.

    Raises:
        ContextError: ``ordering`` does not give a Leonard system.
    """
    if not verify_leonard_system(ctx, ordering).is_system:
        raise ContextError(f"ordering {tuple(ordering)} is not a Leonard system")
    if ctx.d <= 2:
        return True
    solved = beta_solve(ctx.theta_star)
    if solved.beta is None:
        return solved.status is BetaStatus.UNCONSTRAINED
    theta = [ctx.theta[k] for k in ordering]
    values = {_recurrence_value(theta, solved.beta, k) for k in range(1, ctx.d)}
    return len(values) == 1
