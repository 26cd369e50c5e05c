"""
Dense exact matrices over Q or GF(p).

Entries are stored row-major as raw field values (see ``FieldSpec``) and
surface as ``FieldElement`` through indexing. Elimination over Q is done
fraction-free on integer-cleared rows (Bareiss), over GF(p) directly.
Rows and columns are 0-indexed.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, TypeAlias

from leonard.algebra.field import FieldElement, FieldSpec, Scalar
from leonard.algebra.polynomial import ExactPolynomial
from leonard.config.constants import MAX_DIMENSION
from leonard.core.errors import (
    DimensionLimitError,
    DimensionMismatchError,
    FieldMismatchError,
    ShapeViolationError,
    SingularMatrixError,
)


logger = logging.getLogger(__name__)

Vector: TypeAlias = tuple[FieldElement, ...]
RawRows: TypeAlias = list[list[Scalar]]


def _coerce(spec: FieldSpec, value: Any) -> Scalar:
    if isinstance(value, FieldElement):
        if value.spec != spec:
            raise FieldMismatchError(f"entry over {value.spec} in a matrix over {spec}")
        return value.value
    if isinstance(value, str):
        return spec.parse_raw(value)
    return spec.reduce(value)


# =============================================================================
# Raw Elimination Kernels
# =============================================================================


def _integer_rows(rows: Sequence[Sequence[Scalar]]) -> list[list[int]]:
    """Scale each row of rationals by the lcm of its denominators."""
    out = []
    for row in rows:
        scale = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def _fraction_free_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) echelon reduction."""
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    r, prev = 0, 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, n_rows):
            f = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def _modular_rank(rows: RawRows, p: int) -> int:
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] % p != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(int(rows[r][c]), -1, p)
        for i in range(r + 1, n_rows):
            f = (rows[i][c] * inv) % p
            if f:
                row_i, row_r = rows[i], rows[r]
                for j in range(c, n_cols):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        r += 1
        if r == n_rows:
            break
    return r


def raw_rank(spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a (not necessarily square) raw matrix."""
    if spec.is_rational:
        return _fraction_free_rank(_integer_rows(rows))
    assert spec.p is not None
    return _modular_rank([list(r) for r in rows], spec.p)


def raw_rref(spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> tuple[RawRows, list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = spec.inverse(m[r][c])
        m[r] = [spec.reduce(x * inv) for x in m[r]]
        for i in range(n_rows):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [spec.reduce(a - f * b) for a, b in zip(m[i], m[r], strict=True)]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m[:r], pivots


def raw_kernel(spec: FieldSpec, rows: Sequence[Sequence[Scalar]], n_cols: int) -> list[list[Scalar]]:
    """Basis of {x : rows x = 0}."""
    rref, pivots = raw_rref(spec, rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v: list[Scalar] = [spec.zero_raw()] * n_cols
        v[f] = spec.one_raw()
        for k, pc in enumerate(pivots):
            v[pc] = spec.reduce(-rref[k][f])
        basis.append(v)
    return basis


def raw_solve(
    spec: FieldSpec,
    columns: Sequence[Sequence[Scalar]],
    rhs: Sequence[Scalar],
) -> list[Scalar] | None:
    """
    Solve ``sum_k c_k columns[k] = rhs``.

    Returns one solution (free variables set to zero) or None when the
    system is inconsistent.
    """
    n_unknowns = len(columns)
    augmented = [
        [columns[k][i] for k in range(n_unknowns)] + [rhs[i]] for i in range(len(rhs))
    ]
    rref, pivots = raw_rref(spec, augmented)
    if n_unknowns in pivots:
        return None
    solution: list[Scalar] = [spec.zero_raw()] * n_unknowns
    for k, pc in enumerate(pivots):
        solution[pc] = rref[k][n_unknowns]
    return solution


def _bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def _berkowitz(rows: list[list[int]]) -> list[int]:
    """
    Coefficients of det(tI - M), highest degree first, division-free.

    Uses the Toeplitz recursion on the leading principal partition
    M = [[a, R], [C, A]].
    """
    n = len(rows)
    if n == 0:
        return [1]
    if n == 1:
        return [1, -rows[0][0]]
    a = rows[0][0]
    R = rows[0][1:]
    C = [rows[i][0] for i in range(1, n)]
    sub = [row[1:] for row in rows[1:]]

    diags = [1, -a]
    vec = C
    for _ in range(n - 1):
        diags.append(-sum(r * v for r, v in zip(R, vec, strict=True)))
        vec = [sum(x * v for x, v in zip(row, vec, strict=True)) for row in sub]

    inner = _berkowitz(sub)
    return [
        sum(diags[i - j] * inner[j] for j in range(min(i, n - 1) + 1))
        for i in range(n + 1)
    ]


def _hessenberg_charpoly(rows: RawRows, p: int) -> list[int]:
    """det(tI - M) over GF(p), lowest degree first, via Hessenberg reduction."""
    n = len(rows)
    h = [list(r) for r in rows]
    for m in range(1, n - 1):
        i = next((k for k in range(m, n) if h[k][m - 1] != 0), None)
        if i is None:
            continue
        if i != m:
            h[i], h[m] = h[m], h[i]
            for row in h:
                row[i], row[m] = row[m], row[i]
        inv = pow(h[m][m - 1], -1, p)
        for j in range(m + 1, n):
            u = (h[j][m - 1] * inv) % p
            if u == 0:
                continue
            h[j] = [(a - u * b) % p for a, b in zip(h[j], h[m], strict=True)]
            for row in h:
                row[m] = (row[m] + u * row[j]) % p

    def mul_linear(poly: list[int], c: int) -> list[int]:
        # (t - c) * poly
        out = [0] * (len(poly) + 1)
        for k, coef in enumerate(poly):
            out[k + 1] = (out[k + 1] + coef) % p
            out[k] = (out[k] - c * coef) % p
        return out

    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        current = mul_linear(polys[m - 1], h[m - 1][m - 1])
        t = 1
        for i in range(1, m):
            t = (t * h[m - i][m - i - 1]) % p
            factor = (t * h[m - i - 1][m - 1]) % p
            for k, coef in enumerate(polys[m - i - 1]):
                current[k] = (current[k] - factor * coef) % p
        polys.append(current)
    return polys[n]


# =============================================================================
# Matrix Types
# =============================================================================


@dataclass(slots=True, frozen=True)
class ExactMatrix:
    """
    Square matrix with exact entries.

    Immutable; every operation returns a new matrix.
    """

    spec: FieldSpec
    n: int
    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionMismatchError("matrix dimension must be at least 1")
        if self.n > MAX_DIMENSION:
            raise DimensionLimitError(f"dimension {self.n} exceeds cap {MAX_DIMENSION}")
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise DimensionMismatchError(f"expected {self.n}x{self.n} entries")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[Any]]) -> ExactMatrix:
        """Build from ints, Fractions, FieldElements or element text."""
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise DimensionMismatchError(f"row of length {len(row)} in a {n}x{n} matrix")
        return cls(spec, n, tuple(tuple(_coerce(spec, v) for v in row) for row in rows))

    @classmethod
    def from_function(
        cls, spec: FieldSpec, n: int, entry: Callable[[int, int], Any]
    ) -> ExactMatrix:
        return cls.from_rows(spec, [[entry(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, spec: FieldSpec, columns: Sequence[Sequence[Any]]) -> ExactMatrix:
        return cls.from_rows(spec, columns).transpose()

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> ExactMatrix:
        one, zero = spec.one_raw(), spec.zero_raw()
        return cls(spec, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, spec: FieldSpec, n: int) -> ExactMatrix:
        zero = spec.zero_raw()
        return cls(spec, n, tuple((zero,) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, spec: FieldSpec, values: Sequence[Any]) -> ExactMatrix:
        n = len(values)
        raw = [_coerce(spec, v) for v in values]
        zero = spec.zero_raw()
        return cls(spec, n, tuple(tuple(raw[i] if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, spec: FieldSpec, n: int, i: int, j: int) -> ExactMatrix:
        """Matrix unit with a single 1 at (i, j)."""
        return cls.from_function(spec, n, lambda a, b: 1 if (a, b) == (i, j) else 0)

    # -------------------------------------------------------------------------
    # Access
    # -------------------------------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> FieldElement:
        i, j = index
        return FieldElement(self.spec, self.rows[i][j])

    def raw(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(FieldElement(self.spec, self.rows[i][j]) for i in range(self.n))

    def row(self, i: int) -> Vector:
        return tuple(FieldElement(self.spec, x) for x in self.rows[i])

    def flatten(self) -> list[Scalar]:
        """Row-major entries as a raw vector of length n^2."""
        return [x for row in self.rows for x in row]

    def to_text(self) -> list[list[str]]:
        return [[self.spec.render(x) for x in row] for row in self.rows]

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _compatible(self, other: ExactMatrix) -> None:
        if other.spec != self.spec:
            raise FieldMismatchError(f"mixed fields {self.spec} and {other.spec}")
        if other.n != self.n:
            raise DimensionMismatchError(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def _map2(self, other: ExactMatrix, op: Callable[[Scalar, Scalar], Scalar]) -> ExactMatrix:
        self._compatible(other)
        reduce = self.spec.reduce
        return ExactMatrix(
            self.spec,
            self.n,
            tuple(
                tuple(reduce(op(a, b)) for a, b in zip(ra, rb, strict=True))
                for ra, rb in zip(self.rows, other.rows, strict=True)
            ),
        )

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return self._map2(other, lambda a, b: a + b)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self._map2(other, lambda a, b: a - b)

    def __neg__(self) -> ExactMatrix:
        return self.scale(-1)

    def scale(self, c: Any) -> ExactMatrix:
        k = _coerce(self.spec, c)
        reduce = self.spec.reduce
        return ExactMatrix(self.spec, self.n, tuple(tuple(reduce(k * x) for x in row) for row in self.rows))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._compatible(other)
        reduce = self.spec.reduce
        cols = list(zip(*other.rows, strict=True))
        return ExactMatrix(
            self.spec,
            self.n,
            tuple(
                tuple(reduce(sum(a * b for a, b in zip(row, col, strict=True) if a)) for col in cols)
                for row in self.rows
            ),
        )

    def matmul(self, other: ExactMatrix) -> ExactMatrix:
        return self @ other

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.spec, self.n, tuple(zip(*self.rows, strict=True)))

    def power(self, k: int) -> ExactMatrix:
        if k < 0:
            return self.inverse().power(-k)
        result = ExactMatrix.identity(self.spec, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, vector: Sequence[Scalar]) -> list[Scalar]:
        """Raw matrix-vector product."""
        reduce = self.spec.reduce
        return [reduce(sum(a * b for a, b in zip(row, vector, strict=True))) for row in self.rows]

    # -------------------------------------------------------------------------
    # Predicates
    # -------------------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.spec, self.n)

    def diagonal_entries(self) -> list[FieldElement]:
        return [FieldElement(self.spec, self.rows[i][i]) for i in range(self.n)]

    # -------------------------------------------------------------------------
    # Elimination
    # -------------------------------------------------------------------------

    def rank(self) -> int:
        return raw_rank(self.spec, self.rows)

    def kernel_basis(self) -> list[Vector]:
        """Linearly independent basis of the null space."""
        return [
            tuple(FieldElement(self.spec, x) for x in v)
            for v in raw_kernel(self.spec, self.rows, self.n)
        ]

    def determinant(self) -> FieldElement:
        if self.spec.is_rational:
            denominators = 1
            ints = []
            for row in self.rows:
                scale = math.lcm(*(Fraction(x).denominator for x in row))
                denominators *= scale
                ints.append([int(Fraction(x) * scale) for x in row])
            return self.spec.element(Fraction(_bareiss_det(ints), denominators))
        rref, _ = raw_rref(self.spec, self.rows)
        if len(rref) < self.n:
            return self.spec.zero()
        # Determinant from the LU pivots
        assert self.spec.p is not None
        p = self.spec.p
        m = [list(r) for r in self.rows]
        det = 1
        for c in range(self.n):
            pivot = next(i for i in range(c, self.n) if m[i][c] != 0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = (det * m[c][c]) % p
            inv = pow(m[c][c], -1, p)
            for i in range(c + 1, self.n):
                f = (m[i][c] * inv) % p
                if f:
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[c], strict=True)]
        return self.spec.element(det)

    def inverse(self) -> ExactMatrix:
        n = self.n
        one, zero = self.spec.one_raw(), self.spec.zero_raw()
        augmented = [
            list(row) + [one if i == j else zero for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        rref, pivots = raw_rref(self.spec, augmented)
        if pivots[:n] != list(range(n)) or len(rref) < n:
            raise SingularMatrixError("matrix is not invertible")
        return ExactMatrix(self.spec, n, tuple(tuple(row[n:]) for row in rref))

    def solve(self, rhs: Sequence[Any]) -> Vector | None:
        """One solution of X v = rhs, or None when inconsistent."""
        columns = [[self.rows[i][j] for i in range(self.n)] for j in range(self.n)]
        sol = raw_solve(self.spec, columns, [_coerce(self.spec, x) for x in rhs])
        if sol is None:
            return None
        return tuple(FieldElement(self.spec, x) for x in sol)

    # -------------------------------------------------------------------------
    # Polynomials
    # -------------------------------------------------------------------------

    def char_poly(self) -> ExactPolynomial:
        """
        Monic det(tI - X).

        Over Q the matrix is cleared to integers (X = M / L) and the
        division-free Berkowitz recursion runs on M; coefficient k of the
        result is rescaled by L^-(n-k). Over GF(p) a Hessenberg reduction
        is used.
        """
        if self.spec.is_rational:
            scale = math.lcm(*(Fraction(x).denominator for row in self.rows for x in row))
            ints = [[int(Fraction(x) * scale) for x in row] for row in self.rows]
            high_first = _berkowitz(ints)
            coeffs = [Fraction(c, scale**k) for k, c in enumerate(high_first)]
            return ExactPolynomial.from_raw(self.spec, reversed(coeffs))
        assert self.spec.p is not None
        return ExactPolynomial.from_raw(
            self.spec, _hessenberg_charpoly([[int(x) for x in row] for row in self.rows], self.spec.p)
        )

    def minimal_polynomial(self) -> ExactPolynomial:
        """Monic polynomial of least degree annihilating the matrix."""
        powers = [ExactMatrix.identity(self.spec, self.n).flatten()]
        current = ExactMatrix.identity(self.spec, self.n)
        for k in range(1, self.n + 1):
            current = current @ self
            target = current.flatten()
            coeffs = raw_solve(self.spec, powers, target)
            if coeffs is not None:
                return ExactPolynomial.from_raw(self.spec, [-c for c in coeffs] + [1])
            powers.append(target)
        raise AssertionError("Cayley-Hamilton bound exceeded")  # pragma: no cover

    def evaluate(self, poly: ExactPolynomial) -> ExactMatrix:
        """p(X) by Horner's rule."""
        if poly.spec != self.spec:
            raise FieldMismatchError(f"mixed fields {self.spec} and {poly.spec}")
        identity = ExactMatrix.identity(self.spec, self.n)
        result = ExactMatrix.zeros(self.spec, self.n)
        for c in reversed(poly.coefficients):
            result = result @ self + identity.scale(c)
        return result

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x!s:>6}" for x in row) for row in self.to_text())


def identity(spec: FieldSpec, n: int) -> ExactMatrix:
    return ExactMatrix.identity(spec, n)


def matmul(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return x @ y


def rank(x: ExactMatrix) -> int:
    return x.rank()


def kernel_basis(x: ExactMatrix) -> list[Vector]:
    return x.kernel_basis()


def char_poly(x: ExactMatrix) -> ExactPolynomial:
    return x.char_poly()


def rank_of_vectors(spec: FieldSpec, vectors: Iterable[Sequence[Scalar]]) -> int:
    """Rank of a family of raw vectors of equal length."""
    return raw_rank(spec, [list(v) for v in vectors])


# =============================================================================
# Bases & Subspaces
# =============================================================================


@dataclass(slots=True, frozen=True)
class BasisChange:
    """
    Change of basis.

    ``forward`` has the new basis vectors as columns (old coordinates);
    ``inverse`` is its inverse.
    """

    forward: ExactMatrix
    inverse: ExactMatrix

    def __post_init__(self) -> None:
        if not (self.forward @ self.inverse).is_identity():
            raise SingularMatrixError("basis change is not invertible")

    @classmethod
    def from_columns(cls, spec: FieldSpec, columns: Sequence[Sequence[Any]]) -> BasisChange:
        forward = ExactMatrix.from_columns(spec, columns)
        return cls(forward, forward.inverse())

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> BasisChange:
        eye = ExactMatrix.identity(spec, n)
        return cls(eye, eye)

    @property
    def columns(self) -> list[Vector]:
        return [self.forward.column(j) for j in range(self.forward.n)]


def represent(x: ExactMatrix, basis: BasisChange) -> ExactMatrix:
    """Matrix of the operator ``x`` with respect to the new basis."""
    return basis.inverse @ x @ basis.forward


@dataclass(slots=True, frozen=True)
class ExactSubspace:
    """
    Subspace of the coordinate space, held by its reduced row echelon basis.

    The echelon form is canonical, so equality of subspaces is equality of
    instances.
    """

    spec: FieldSpec
    ambient: int
    basis: tuple[tuple[Scalar, ...], ...]

    @classmethod
    def span(cls, spec: FieldSpec, ambient: int, vectors: Iterable[Sequence[Any]]) -> ExactSubspace:
        rows = [[_coerce(spec, x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise DimensionMismatchError(f"vector of length {len(v)} in dimension {ambient}")
        rref, _ = raw_rref(spec, rows) if rows else ([], [])
        return cls(spec, ambient, tuple(tuple(r) for r in rref))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[Vector]:
        return [tuple(FieldElement(self.spec, x) for x in v) for v in self.basis]

    def contains(self, vector: Sequence[Any]) -> bool:
        raw = [_coerce(self.spec, x) for x in vector]
        if all(x == 0 for x in raw):
            return True
        return raw_rank(self.spec, [*self.basis, raw]) == self.dim

    def is_invariant(self, x: ExactMatrix) -> bool:
        """Whether x U is contained in U."""
        return all(self.contains(x.apply(v)) for v in self.basis)


# =============================================================================
# Tridiagonal Shape
# =============================================================================


def is_irreducible_tridiagonal(x: ExactMatrix) -> bool:
    """Zero outside the three central diagonals, nonzero on sub/superdiagonal."""
    for i in range(x.n):
        for j in range(x.n):
            if abs(i - j) > 1 and x.rows[i][j] != 0:
                return False
    return all(x.rows[i][i + 1] != 0 and x.rows[i + 1][i] != 0 for i in range(x.n - 1))


def tridiagonal_power_entry_check(x: ExactMatrix) -> bool:
    """
    Check the entry pattern of powers of an irreducible tridiagonal matrix.

    For 0 <= r <= n-1: (X^r)_ij = 0 when r < |i-j|, and at r = |i-j| the
    entry is the product of the super- (i <= j) or sub- (i >= j) diagonal
    entries between i and j.
    """
    if not is_irreducible_tridiagonal(x):
        raise ShapeViolationError("matrix is not irreducible tridiagonal")
    spec = x.spec
    power = ExactMatrix.identity(spec, x.n)
    for r in range(x.n):
        for i in range(x.n):
            for j in range(x.n):
                entry = power.rows[i][j]
                gap = abs(i - j)
                if r < gap and entry != 0:
                    return False
                if r == gap:
                    expected = spec.one_raw()
                    if i <= j:
                        for h in range(i, j):
                            expected = spec.reduce(expected * x.rows[h][h + 1])
                    else:
                        for h in range(j, i):
                            expected = spec.reduce(expected * x.rows[h + 1][h])
                    if entry != expected or entry == 0:
                        return False
        power = power @ x
    return True
