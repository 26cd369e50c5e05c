"""
Unit tests for ExactMatrix, subspaces and the tridiagonal helpers.
"""

from collections.abc import Callable
from fractions import Fraction

import pytest

from leonard.algebra.field import FieldSpec
from leonard.algebra.matrix import (
    BasisChange,
    ExactMatrix,
    ExactSubspace,
    is_irreducible_tridiagonal,
    represent,
    tridiagonal_power_entry_check,
)
from leonard.algebra.polynomial import ExactPolynomial
from leonard.core.errors import (
    DimensionLimitError,
    DimensionMismatchError,
    FieldMismatchError,
    ShapeViolationError,
    SingularMatrixError,
)
from leonard.instances.generators import krawtchouk_matrices
from leonard.instances.sampling import random_matrix, random_tridiagonal
from leonard.utils.rng import SplitMix64


FIELDS = [FieldSpec.rational(), FieldSpec.gf(101)]


class TestConstruction:
    """Tests for matrix constructors and shape checks."""

    def test_from_rows_text_entries(self, rational: FieldSpec) -> None:
        """Test that text, ints and Fractions mix in one matrix."""
        m = ExactMatrix.from_rows(rational, [["1/2", 1], [Fraction(3, 4), "-2"]])
        assert m.to_text() == [["1/2", "1"], ["3/4", "-2"]]

    def test_ragged_rows(self, rational: FieldSpec) -> None:
        """Test that non-square input is rejected."""
        with pytest.raises(DimensionMismatchError):
            ExactMatrix.from_rows(rational, [[1, 2], [3]])

    def test_dimension_cap(self, rational: FieldSpec) -> None:
        """Test the dense-storage cap."""
        with pytest.raises(DimensionLimitError):
            ExactMatrix.zeros(rational, 65)

    def test_unit(self, rational: FieldSpec) -> None:
        """Test matrix units."""
        e = ExactMatrix.unit(rational, 3, 1, 2)
        assert e[1, 2] == 1
        assert sum(1 for x in e.flatten() if x != 0) == 1


class TestArithmetic:
    """Tests for matrix arithmetic."""

    def test_product_and_transpose(self, rational: FieldSpec) -> None:
        """Test (XY)^t = Y^t X^t."""
        x = ExactMatrix.from_rows(rational, [[1, 2], [3, 4]])
        y = ExactMatrix.from_rows(rational, [[0, 1], [5, "1/2"]])
        assert (x @ y).transpose() == y.transpose() @ x.transpose()
        assert (x @ y).to_text() == [["10", "2"], ["20", "5"]]

    def test_power(self, rational: FieldSpec) -> None:
        """Test repeated squaring against direct products."""
        x = ExactMatrix.from_rows(rational, [[1, 1], [0, 1]])
        assert x.power(5).to_text() == [["1", "5"], ["0", "1"]]
        assert x.power(0).is_identity()
        assert x.power(-1).to_text() == [["1", "-1"], ["0", "1"]]

    def test_mixed_fields(self, rational: FieldSpec, gf7: FieldSpec) -> None:
        """Test that matrices over different fields do not combine."""
        with pytest.raises(FieldMismatchError):
            _ = ExactMatrix.identity(rational, 2) + ExactMatrix.identity(gf7, 2)

    def test_evaluate_polynomial(self, rational: FieldSpec) -> None:
        """Test p(X) for p = x^2 - 1 on a reflection."""
        x = ExactMatrix.from_rows(rational, [[0, 1], [1, 0]])
        p = ExactPolynomial.from_raw(rational, [-1, 0, 1])
        assert x.evaluate(p).is_zero()


class TestElimination:
    """Tests for rank, determinant, inverse and solving."""

    def test_rank(self, rational: FieldSpec, gf7: FieldSpec) -> None:
        """Test rank over Q and a rank drop over GF(7)."""
        rows = [[1, 2], [3, 13]]
        assert ExactMatrix.from_rows(rational, rows).rank() == 2
        # det = 13 - 6 = 7
        assert ExactMatrix.from_rows(gf7, rows).rank() == 1

    def test_determinant(self, rational: FieldSpec, gf7: FieldSpec) -> None:
        """Test determinants over both fields."""
        rows = [[1, 2], [3, 4]]
        assert ExactMatrix.from_rows(rational, rows).determinant() == -2
        assert ExactMatrix.from_rows(gf7, rows).determinant() == 5
        assert ExactMatrix.from_rows(rational, [["1/2", 0], [0, "2/3"]]).determinant() == Fraction(1, 3)

    def test_inverse(self, rational: FieldSpec, gf101: FieldSpec) -> None:
        """Test X X^-1 = I over both fields."""
        for spec in (rational, gf101):
            x = ExactMatrix.from_rows(spec, [[2, 1, 0], [1, 3, 1], [0, 1, 4]])
            assert (x @ x.inverse()).is_identity()

    def test_singular_inverse(self, rational: FieldSpec) -> None:
        """Test that singular matrices have no inverse."""
        with pytest.raises(SingularMatrixError):
            ExactMatrix.from_rows(rational, [[1, 2], [2, 4]]).inverse()

    def test_kernel(self, rational: FieldSpec) -> None:
        """Test the null space of a rank-1 matrix."""
        kernel = ExactMatrix.from_rows(rational, [[1, 1], [1, 1]]).kernel_basis()
        assert len(kernel) == 1
        assert kernel[0][0] + kernel[0][1] == 0

    def test_solve(self, rational: FieldSpec) -> None:
        """Test a consistent and an inconsistent system."""
        x = ExactMatrix.from_rows(rational, [[1, 1], [1, -1]])
        assert x.solve([3, 1]) == (2, 1)
        assert ExactMatrix.from_rows(rational, [[1, 1], [1, 1]]).solve([1, 2]) is None


class TestPolynomials:
    """Tests for characteristic and minimal polynomials."""

    def test_char_poly_krawtchouk(self, rational: FieldSpec) -> None:
        """Test det(tI - A) = (t^2 - 1)(t^2 - 9) for the d = 3 Krawtchouk matrix."""
        a, _ = krawtchouk_matrices(3, rational)
        assert a.char_poly().render() == ["9", "0", "-10", "0", "1"]

    def test_char_poly_gfp(self, gf101: FieldSpec) -> None:
        """Test the Hessenberg route on the same matrix over GF(101)."""
        a, _ = krawtchouk_matrices(3, gf101)
        assert a.char_poly().render() == ["9", "0", "91", "0", "1"]

    def test_char_poly_fractional(self, rational: FieldSpec) -> None:
        """Test rescaling after clearing denominators."""
        x = ExactMatrix.from_rows(rational, [["1/2", 1], [0, "1/3"]])
        assert x.char_poly().render() == ["1/6", "-5/6", "1"]

    def test_char_poly_annihilates(self, gf101: FieldSpec) -> None:
        """Test Cayley-Hamilton on random matrices."""
        rng = SplitMix64(11)
        for n in (2, 3, 5):
            x = random_tridiagonal(rng, gf101, n)
            assert x.evaluate(x.char_poly()).is_zero()

    @pytest.mark.parametrize("spec", FIELDS, ids=lambda s: s.label)
    @pytest.mark.parametrize("n", range(1, 7))
    def test_char_poly_conjugation_invariant(
        self,
        spec: FieldSpec,
        n: int,
        invertible_matrix: Callable[[SplitMix64, FieldSpec, int], ExactMatrix],
    ) -> None:
        """Test char_poly(B^-1 X B) = char_poly(X) for random X and invertible B."""
        rng = SplitMix64(200 + n)
        for _ in range(3):
            x = random_matrix(rng, spec, n)
            b = invertible_matrix(rng, spec, n)
            assert (b.inverse() @ x @ b).char_poly() == x.char_poly()

    @pytest.mark.parametrize("n", range(1, 7))
    def test_char_poly_agrees_across_fields(
        self, rational: FieldSpec, gf101: FieldSpec, n: int
    ) -> None:
        """Test that the char poly of an integer matrix over Q reduces to the GF(101) one."""
        rng = SplitMix64(300 + n)
        for _ in range(3):
            x = random_matrix(rng, rational, n)
            reduced = ExactMatrix.from_rows(gf101, [[int(v) for v in row] for row in x.rows])
            expected = ExactPolynomial.from_raw(gf101, x.char_poly().coefficients)
            assert reduced.char_poly() == expected

    def test_minimal_polynomial(self, rational: FieldSpec) -> None:
        """Test that a scalar matrix has a linear minimal polynomial."""
        x = ExactMatrix.identity(rational, 3).scale(2)
        assert x.minimal_polynomial().render() == ["-2", "1"]

    def test_minimal_polynomial_repeated_diagonal(self, rational: FieldSpec) -> None:
        """Test that repeated diagonal entries lower the degree."""
        x = ExactMatrix.diagonal(rational, [0, 1, 1, 0])
        assert x.minimal_polynomial() == ExactPolynomial.from_roots(rational, [0, 1])


class TestSubspaces:
    """Tests for ExactSubspace and BasisChange."""

    def test_span_and_contains(self, rational: FieldSpec) -> None:
        """Test the canonical echelon basis."""
        u = ExactSubspace.span(rational, 3, [[1, 0, 0], [1, 1, 0], [2, 1, 0]])
        assert u.dim == 2
        assert u.contains([0, 1, 0])
        assert not u.contains([0, 0, 1])
        assert u == ExactSubspace.span(rational, 3, [[0, 1, 0], [1, 0, 0]])

    def test_invariance(self, rational: FieldSpec) -> None:
        """Test invariance under a diagonal and a shift."""
        u = ExactSubspace.span(rational, 3, [[1, 0, 0]])
        assert u.is_invariant(ExactMatrix.diagonal(rational, [1, 2, 3]))
        assert not u.is_invariant(ExactMatrix.from_rows(rational, [[0, 0, 0], [1, 0, 0], [0, 1, 0]]))

    def test_basis_change(self, rational: FieldSpec) -> None:
        """Test that represent conjugates into the new basis."""
        basis = BasisChange.from_columns(rational, [[1, 1], [1, -1]])
        x = ExactMatrix.from_rows(rational, [[0, 1], [1, 0]])
        assert represent(x, basis) == ExactMatrix.diagonal(rational, [1, -1])

    def test_singular_basis(self, rational: FieldSpec) -> None:
        """Test that dependent columns are rejected."""
        with pytest.raises(SingularMatrixError):
            BasisChange.from_columns(rational, [[1, 2], [2, 4]])


class TestTridiagonal:
    """Tests for the irreducible tridiagonal helpers."""

    def test_krawtchouk_is_irreducible(self, rational: FieldSpec) -> None:
        """Test the Krawtchouk matrix shape."""
        a, astar = krawtchouk_matrices(4, rational)
        assert is_irreducible_tridiagonal(a)
        assert not is_irreducible_tridiagonal(astar)

    def test_power_entry_pattern(self, rational: FieldSpec, gf101: FieldSpec) -> None:
        """Test the entry pattern of powers on random irreducible tridiagonal matrices."""
        rng = SplitMix64(3)
        for spec in (rational, gf101):
            for n in range(2, 8):
                assert tridiagonal_power_entry_check(random_tridiagonal(rng, spec, n))

    def test_power_entry_rejects_shape(self, rational: FieldSpec) -> None:
        """Test that a full matrix is rejected."""
        with pytest.raises(ShapeViolationError):
            tridiagonal_power_entry_check(ExactMatrix.from_rows(rational, [[1, 1, 1], [1, 1, 1], [1, 1, 1]]))
