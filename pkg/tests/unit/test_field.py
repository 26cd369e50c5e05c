"""
Unit tests for exact field arithmetic.

Tests parsing, canonical forms and the field axioms over Q and GF(p).
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leonard.algebra.field import FieldElement, FieldSpec, arith, parse_element
from leonard.core.errors import (
    ElementParseError,
    FieldMismatchError,
    NotPrimeError,
    ZeroDivisionFieldError,
)
from leonard.utils.primes import is_prime


GF101 = FieldSpec.gf(101)
Q = FieldSpec.rational()

ELEMENTS = {
    "rational": st.fractions(max_denominator=1000).map(Q.element),
    "gfp:101": st.integers(min_value=0, max_value=100).map(GF101.element),
}
FIELD_LABELS = list(ELEMENTS)


class TestFieldSpec:
    """Tests for FieldSpec construction and descriptors."""

    def test_rational_label(self) -> None:
        """Test that Q renders as rational with characteristic 0."""
        assert Q.label == "rational"
        assert Q.characteristic() == 0
        assert Q.to_json() == "rational"

    def test_prime_label(self) -> None:
        """Test GF(p) labels and JSON form."""
        spec = FieldSpec.gf(101)
        assert spec.label == "gfp:101"
        assert spec.characteristic() == 101
        assert spec.to_json() == {"gfp": 101}
        assert str(spec) == "GF(101)"

    @pytest.mark.parametrize("p", [0, 1, 4, 100, 2**31])
    def test_rejects_bad_modulus(self, p: int) -> None:
        """Test that composite and out-of-range moduli are rejected."""
        with pytest.raises(NotPrimeError):
            FieldSpec.gf(p)

    def test_largest_prime_accepted(self) -> None:
        """Test that 2^31 - 1 is a valid modulus."""
        assert FieldSpec.gf(2**31 - 1).p == 2**31 - 1

    def test_from_descriptor(self) -> None:
        """Test CLI descriptor parsing."""
        assert FieldSpec.from_descriptor("rational") == Q
        assert FieldSpec.from_descriptor(" GFP:101 ") == GF101

    def test_from_descriptor_errors(self) -> None:
        """Test malformed descriptors."""
        with pytest.raises(NotPrimeError):
            FieldSpec.from_descriptor("gfp:abc")
        with pytest.raises(ElementParseError):
            FieldSpec.from_descriptor("real")

    def test_is_prime(self) -> None:
        """Test the trial-division primality test."""
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestParsing:
    """Tests for element text parsing."""

    def test_rational_lowest_terms(self) -> None:
        """Test that 3/6 is stored as 1/2."""
        x = parse_element("3/6", Q)
        assert x.value == Fraction(1, 2)
        assert x.render() == "1/2"

    def test_negative_denominator(self) -> None:
        """Test that the sign moves to the numerator."""
        assert parse_element("1/-2", Q).render() == "-1/2"

    def test_prime_division(self) -> None:
        """Test that a/b means a * b^-1 mod p."""
        gf7 = FieldSpec.gf(7)
        assert parse_element("1/2", gf7).value == 4
        assert parse_element("-1", gf7).value == 6

    def test_zero_denominator(self) -> None:
        """Test zero denominators over both fields."""
        with pytest.raises(ZeroDivisionFieldError):
            parse_element("1/0", Q)
        with pytest.raises(ZeroDivisionFieldError):
            parse_element("3/7", FieldSpec.gf(7))

    @pytest.mark.parametrize("text", ["", "abc", "1.5", "1/2/3", "--1"])
    def test_malformed(self, text: str) -> None:
        """Test that non-numeric text is rejected."""
        with pytest.raises(ElementParseError):
            parse_element(text, Q)


class TestArithmetic:
    """Tests for FieldElement operations."""

    def test_mixed_fields_rejected(self) -> None:
        """Test that operands over different fields do not combine."""
        with pytest.raises(FieldMismatchError):
            _ = FieldSpec.gf(7).one() + GF101.one()

    def test_int_operands(self) -> None:
        """Test that plain ints are promoted into the field."""
        x = GF101.element(100)
        assert x + 1 == 0
        assert 2 * x == 99

    def test_inverse_of_zero(self) -> None:
        """Test that zero has no inverse."""
        with pytest.raises(ZeroDivisionFieldError):
            Q.zero().inv()
        with pytest.raises(ZeroDivisionFieldError):
            _ = GF101.one() / GF101.zero()

    def test_ordering(self) -> None:
        """Test canonical ascending order: numeric over Q, residue over GF(p)."""
        assert sorted([Q.element(3), Q.element(-1), Q.element(Fraction(1, 2))]) == [-1, Fraction(1, 2), 3]
        assert sorted([GF101.element(-1), GF101.element(5)]) == [5, 100]

    def test_power(self) -> None:
        """Test integer powers, including negative exponents."""
        two = Q.element(2)
        assert two**10 == 1024
        assert two**-2 == Fraction(1, 4)

    def test_arith_dispatch(self) -> None:
        """Test the named-operation dispatcher."""
        a, b = Q.element(3), Q.element(4)
        assert arith("add", a, b) == 7
        assert arith("div", a, b) == Fraction(3, 4)
        assert arith("neg", a) == -3
        assert arith("eq", a, b) is False
        with pytest.raises(ValueError):
            arith("pow", a, b)

    def test_hash_matches_equality(self) -> None:
        """Test that equal elements hash alike."""
        assert len({GF101.element(1), GF101.element(102), parse_element("1", GF101)}) == 1

    def test_repr_names_field(self) -> None:
        """Test the debugging representation."""
        assert repr(FieldElement(GF101, 5)) == "5 in GF(101)"


class TestFieldAxioms:
    """Property tests of the field axioms."""

    @given(st.integers(), st.integers(), st.integers())
    def test_gfp_distributive(self, a: int, b: int, c: int) -> None:
        """Test a(b + c) = ab + ac over GF(101)."""
        x, y, z = GF101.element(a), GF101.element(b), GF101.element(c)
        assert x * (y + z) == x * y + x * z

    @given(st.integers(), st.integers().filter(lambda n: n % 101 != 0))
    def test_gfp_division_inverts_multiplication(self, a: int, b: int) -> None:
        """Test (ab) / b = a over GF(101)."""
        x, y = GF101.element(a), GF101.element(b)
        assert (x * y) / y == x
        assert y * y.inv() == 1

    @given(st.fractions(max_denominator=1000), st.fractions(max_denominator=1000))
    def test_rational_additive_inverse(self, a: Fraction, b: Fraction) -> None:
        """Test (a + b) - b = a over Q."""
        x, y = Q.element(a), Q.element(b)
        assert (x + y) - y == x
        assert x + (-x) == 0

    @given(st.fractions(max_denominator=1000))
    def test_rational_render_parse(self, a: Fraction) -> None:
        """Test that rendered text parses back to the same element."""
        x = Q.element(a)
        assert parse_element(x.render(), Q) == x


class TestFieldLaws:
    """Ring and field laws on 200 random triples per field."""

    @staticmethod
    def _triple(data: st.DataObject, label: str) -> tuple[FieldElement, ...]:
        return tuple(data.draw(ELEMENTS[label]) for _ in range(3))

    @pytest.mark.parametrize("label", FIELD_LABELS)
    @settings(max_examples=200)
    @given(data=st.data())
    def test_addition(self, label: str, data: st.DataObject) -> None:
        """Test associativity, commutativity, zero and negation for +."""
        x, y, z = self._triple(data, label)
        zero = x.spec.zero()
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert x + zero == x
        assert x + (-x) == zero

    @pytest.mark.parametrize("label", FIELD_LABELS)
    @settings(max_examples=200)
    @given(data=st.data())
    def test_multiplication(self, label: str, data: st.DataObject) -> None:
        """Test associativity, commutativity and the unit for multiplication."""
        x, y, z = self._triple(data, label)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * x.spec.one() == x

    @pytest.mark.parametrize("label", FIELD_LABELS)
    @settings(max_examples=200)
    @given(data=st.data())
    def test_distributive(self, label: str, data: st.DataObject) -> None:
        """Test x(y + z) = xy + xz and (x + y)z = xz + yz."""
        x, y, z = self._triple(data, label)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z

    @pytest.mark.parametrize("label", FIELD_LABELS)
    @settings(max_examples=200)
    @given(data=st.data())
    def test_inverse(self, label: str, data: st.DataObject) -> None:
        """Test x inv(x) = 1 and (xy) / x = y for nonzero x."""
        x = data.draw(ELEMENTS[label].filter(lambda e: not e.is_zero()))
        y = data.draw(ELEMENTS[label])
        assert x * x.inv() == x.spec.one()
        assert (x * y) / x == y
