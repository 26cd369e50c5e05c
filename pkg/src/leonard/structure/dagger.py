"""
Generation by A and E*_0, and the antiautomorphism dagger.

In the dual eigenbasis dagger is X -> D^-1 X^t D with the diagonal
conjugator D_ii = (A_01 A_12 ... A_{i-1,i}) / (A_10 A_21 ... A_{i,i-1}).
"""

import logging
from dataclasses import dataclass

from leonard.algebra.field import FieldElement, Scalar
from leonard.algebra.matrix import ExactMatrix, raw_kernel, raw_solve, rank_of_vectors
from leonard.config.constants import DEFAULT_DAGGER_SAMPLES
from leonard.core.errors import IdentityViolationError
from leonard.core.types import CheckReport
from leonard.instances.sampling import random_matrix, random_polynomial
from leonard.structure.context import Context
from leonard.utils.rng import SplitMix64


logger = logging.getLogger(__name__)


# =============================================================================
# Basis A^r E*_0 A^s
# =============================================================================


def basis_elements(ctx: Context) -> dict[tuple[int, int], ExactMatrix]:
    """A^r E*_0 A^s for 0 <= r, s <= d, keyed by (r, s)."""
    powers = [ExactMatrix.identity(ctx.field, ctx.n)]
    for _ in range(ctx.d):
        powers.append(powers[-1] @ ctx.A)
    e0 = ctx.Estar(0)
    left = [p @ e0 for p in powers]
    return {(r, s): left[r] @ powers[s] for r in range(ctx.n) for s in range(ctx.n)}


def _entry_pattern_holds(ctx: Context, elements: dict[tuple[int, int], ExactMatrix]) -> bool:
    spec = ctx.field
    a = ctx.A
    for (r, s), m in elements.items():
        for i in range(ctx.n):
            for j in range(ctx.n):
                if (i > r or j > s) and m.raw(i, j) != 0:
                    return False
        expected = spec.one_raw()
        for h in range(r):
            expected = spec.reduce(expected * a.raw(h + 1, h))
        for h in range(s):
            expected = spec.reduce(expected * a.raw(h, h + 1))
        if m.raw(r, s) == 0 or m.raw(r, s) != expected:
            return False
    return True


def basis_certificate(ctx: Context) -> bool:
    """
    Whether the (d+1)^2 elements A^r E*_0 A^s span the full matrix algebra.

    Also checks their triangular entry pattern: zero at (i, j) when i > r
    or j > s, and the product of sub- and superdiagonal entries at (r, s).
    """
    elements = basis_elements(ctx)
    full_rank = rank_of_vectors(ctx.field, (m.flatten() for m in elements.values())) == ctx.n**2
    pattern = _entry_pattern_holds(ctx, elements)
    logger.debug(f"basis certificate d={ctx.d}: rank_full={full_rank} pattern={pattern}")
    return full_rank and pattern


def generation_check(ctx: Context, x: ExactMatrix) -> dict[tuple[int, int], FieldElement]:
    """
    Coefficients of ``x`` in the basis A^r E*_0 A^s.

    Raises:
        IdentityViolationError: no solution, or the reconstruction differs.
    """
    elements = basis_elements(ctx)
    keys = list(elements)
    solution = raw_solve(ctx.field, [elements[k].flatten() for k in keys], x.flatten())
    if solution is None:
        raise IdentityViolationError("matrix is outside the span of A^r E*_0 A^s")
    rebuilt = ExactMatrix.zeros(ctx.field, ctx.n)
    for k, c in zip(keys, solution, strict=True):
        if c != 0:
            rebuilt = rebuilt + elements[k].scale(c)
    if rebuilt != x:
        raise IdentityViolationError("reconstruction from A^r E*_0 A^s differs from the input")
    return {k: FieldElement(ctx.field, c) for k, c in zip(keys, solution, strict=True)}


# =============================================================================
# Antiautomorphism
# =============================================================================


@dataclass(slots=True, frozen=True)
class DaggerData:
    """Concrete dagger map for one context."""

    ctx: Context
    D: ExactMatrix
    D_inv: ExactMatrix

    def apply(self, x: ExactMatrix) -> ExactMatrix:
        return self.D_inv @ x.transpose() @ self.D

    def __call__(self, x: ExactMatrix) -> ExactMatrix:
        return self.apply(x)

    @property
    def diagonal(self) -> list[FieldElement]:
        return self.D.diagonal_entries()


def conjugator_diagonal(ctx: Context) -> list[Scalar]:
    spec = ctx.field
    a = ctx.A
    values = [spec.one_raw()]
    for i in range(1, ctx.n):
        ratio = spec.divide(a.raw(i - 1, i), a.raw(i, i - 1))
        values.append(spec.reduce(values[-1] * ratio))
    return values


def build_dagger(ctx: Context) -> DaggerData:
    """
    Construct D and check D^-1 A^t D = A.

    Raises:
        IdentityViolationError: the conjugation does not fix A.
    """
    values = conjugator_diagonal(ctx)
    d = ExactMatrix.diagonal(ctx.field, values)
    d_inv = ExactMatrix.diagonal(ctx.field, [ctx.field.inverse(v) for v in values])
    dagger = DaggerData(ctx=ctx, D=d, D_inv=d_inv)
    if dagger.apply(ctx.A) != ctx.A:
        raise IdentityViolationError("D^-1 A^t D != A")
    logger.debug(f"dagger conjugator D = diag({', '.join(ctx.field.render(v) for v in values)})")
    return dagger


def conjugator_is_unique(dagger: DaggerData) -> bool:
    """
    Re-derive D from the linear conditions A_ji D_j = D_i A_ij.

    The solution space must be a line, and its member with D_00 = 1 must
    be the constructed D.
    """
    ctx = dagger.ctx
    spec = ctx.field
    n = ctx.n
    equations = []
    for i in range(n):
        for j in range(n):
            row = [spec.zero_raw()] * n
            row[j] = spec.reduce(row[j] + ctx.A.raw(j, i))
            row[i] = spec.reduce(row[i] - ctx.A.raw(i, j))
            if any(x != 0 for x in row):
                equations.append(row)
    kernel = raw_kernel(spec, equations, n)
    if len(kernel) != 1 or kernel[0][0] == 0:
        return False
    scale = spec.inverse(kernel[0][0])
    return [spec.reduce(x * scale) for x in kernel[0]] == conjugator_diagonal(ctx)


def dagger_property_suite(
    dagger: DaggerData,
    samples: int = DEFAULT_DAGGER_SAMPLES,
    seed: int = 0,
) -> CheckReport:
    """
    Check the defining identities of dagger on the context and on samples.

    A violation indicates an arithmetic bug; nothing is raised here, the
    report lists every identity and whether it held.
    """
    ctx = dagger.ctx
    spec = ctx.field
    rng = SplitMix64(seed)
    report = CheckReport()

    report.add("A_fixed", dagger(ctx.A) == ctx.A)
    report.add("Astar_fixed", dagger(ctx.Astar) == ctx.Astar)

    bad = [i for i in range(ctx.n) if dagger(ctx.Estar(i)) != ctx.Estar(i)]
    report.add("dual_idempotents_fixed", not bad, f"failed at {bad}" if bad else "")
    bad = [i for i in range(ctx.n) if dagger(ctx.E(i)) != ctx.E(i)]
    report.add("primitive_idempotents_fixed", not bad, f"failed at {bad}" if bad else "")

    involution_ok = True
    anti_ok = True
    for _ in range(samples):
        x = random_matrix(rng, spec, ctx.n)
        y = random_matrix(rng, spec, ctx.n)
        involution_ok = involution_ok and dagger(dagger(x)) == x
        anti_ok = anti_ok and dagger(x @ y) == dagger(y) @ dagger(x)
    report.add("involution", involution_ok, f"{samples} samples")
    report.add("reverses_products", anti_ok, f"{samples} samples")

    poly_a_ok = True
    poly_astar_ok = True
    for _ in range(max(1, samples // 5)):
        f = random_polynomial(rng, spec, ctx.d)
        fa = ctx.A.evaluate(f)
        fs = ctx.Astar.evaluate(f)
        poly_a_ok = poly_a_ok and dagger(fa) == fa
        poly_astar_ok = poly_astar_ok and dagger(fs) == fs
    report.add("polynomials_in_A_fixed", poly_a_ok)
    report.add("polynomials_in_Astar_fixed", poly_astar_ok)

    astar_e = [ctx.Astar @ ctx.E(j) for j in range(ctx.n)]
    zero = [[(ctx.E(i) @ astar_e[j]).is_zero() for j in range(ctx.n)] for i in range(ctx.n)]
    asymmetric = [(i, j) for i in range(ctx.n) for j in range(i + 1, ctx.n) if zero[i][j] != zero[j][i]]
    report.add("edge_symmetry", not asymmetric, f"asymmetric at {asymmetric}" if asymmetric else "")

    report.add("conjugator_unique", conjugator_is_unique(dagger))

    if not report.passed:
        logger.error(f"dagger identities violated: {[c.name for c in report.failures]}")
    return report
