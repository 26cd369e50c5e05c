"""
Exact field arithmetic over Q and GF(p).

Rationals are held as ``fractions.Fraction`` (arbitrary precision, always
in lowest terms). Prime-field residues are plain ints in ``[0, p)``.
``FieldSpec`` also exposes the raw-value operations that the matrix layer
uses in its inner loops.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Any, TypeAlias

from leonard.config.constants import MAX_PRIME
from leonard.core.errors import (
    ElementParseError,
    FieldMismatchError,
    NotPrimeError,
    ZeroDivisionFieldError,
)
from leonard.utils.primes import is_prime


# Raw storage: Fraction over Q, int over GF(p)
Scalar: TypeAlias = Fraction | int

_ELEMENT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class FieldKind(str, Enum):
    """Supported base fields."""

    RATIONAL = "rational"
    PRIME = "gfp"


@dataclass(slots=True, frozen=True)
class FieldSpec:
    """
    Field descriptor.

    ``p`` is present only for prime fields and is checked for primality
    at construction.
    """

    kind: FieldKind
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONAL:
            if self.p is not None:
                raise NotPrimeError("rational field takes no modulus")
            return
        if self.p is None or not 2 <= self.p < MAX_PRIME:
            raise NotPrimeError(f"modulus {self.p} must satisfy 2 <= p < 2^31")
        if not is_prime(self.p):
            raise NotPrimeError(f"modulus {self.p} is not prime")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(FieldKind.RATIONAL)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_descriptor(cls, descriptor: str) -> FieldSpec:
        """
        Parse a CLI field descriptor.

        Accepts ``rational`` and ``gfp:P``.
        """
        text = descriptor.strip().lower()
        if text == "rational":
            return cls.rational()
        if text.startswith("gfp:"):
            try:
                return cls.gf(int(text[4:]))
            except ValueError as e:
                raise NotPrimeError(f"bad modulus in {descriptor!r}") from e
        raise ElementParseError(f"unknown field descriptor {descriptor!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONAL

    def characteristic(self) -> int:
        """0 for Q, p for GF(p)."""
        return 0 if self.p is None else self.p

    @property
    def label(self) -> str:
        return "rational" if self.p is None else f"gfp:{self.p}"

    def to_json(self) -> Any:
        """Instance-file field descriptor."""
        return "rational" if self.p is None else {"gfp": self.p}

    # -------------------------------------------------------------------------
    # Raw-value operations
    # -------------------------------------------------------------------------

    def reduce(self, x: Scalar) -> Scalar:
        """Bring an int/Fraction into canonical raw form."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.divide(x.numerator % self.p, x.denominator % self.p)
        return x % self.p

    def zero_raw(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    def one_raw(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def inverse(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionFieldError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def divide(self, a: Scalar, b: Scalar) -> Scalar:
        if self.p is None:
            if b == 0:
                raise ZeroDivisionFieldError("division by zero")
            return Fraction(a) / Fraction(b)
        return (int(a) * self.inverse(b)) % self.p

    def render(self, x: Scalar) -> str:
        """Canonical text: ``n`` or ``n/d`` over Q, residue over GF(p)."""
        return str(x)

    def parse_raw(self, text: str) -> Scalar:
        match = _ELEMENT_RE.match(text)
        if match is None:
            raise ElementParseError(f"malformed element {text!r}")
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) is not None else 1
        if den == 0:
            raise ZeroDivisionFieldError(f"zero denominator in {text!r}")
        if self.p is None:
            return Fraction(num, den)
        if den % self.p == 0:
            raise ZeroDivisionFieldError(f"denominator of {text!r} vanishes mod {self.p}")
        return self.divide(num % self.p, den % self.p)

    def sort_key(self, x: Scalar) -> Scalar:
        """Canonical ascending order: numeric over Q, residue over GF(p)."""
        return x

    # -------------------------------------------------------------------------
    # Element constructors
    # -------------------------------------------------------------------------

    def element(self, value: Scalar) -> FieldElement:
        return FieldElement(self, self.reduce(value))

    def zero(self) -> FieldElement:
        return FieldElement(self, self.zero_raw())

    def one(self) -> FieldElement:
        return FieldElement(self, self.one_raw())

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


@total_ordering
@dataclass(slots=True, frozen=True)
class FieldElement:
    """
    Immutable exact scalar.

    Equality is canonical-representation equality; ordering is the
    canonical ascending order of the field.
    """

    spec: FieldSpec
    value: Scalar

    def _check(self, other: object) -> FieldElement:
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return self.spec.element(other)
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldMismatchError(f"mixed fields {self.spec} and {other.spec}")
        return other

    def __add__(self, other: object) -> FieldElement:
        o = self._check(other)
        return FieldElement(self.spec, self.spec.reduce(self.value + o.value))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        o = self._check(other)
        return FieldElement(self.spec, self.spec.reduce(self.value - o.value))

    def __rsub__(self, other: object) -> FieldElement:
        return self._check(other) - self

    def __mul__(self, other: object) -> FieldElement:
        o = self._check(other)
        return FieldElement(self.spec, self.spec.reduce(self.value * o.value))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        o = self._check(other)
        return FieldElement(self.spec, self.spec.divide(self.value, o.value))

    def __rtruediv__(self, other: object) -> FieldElement:
        return self._check(other) / self

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.reduce(-self.value))

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inv() ** (-k)
        result = self.spec.one()
        for _ in range(k):
            result = result * self
        return result

    def inv(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inverse(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return self.value == self.spec.reduce(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __lt__(self, other: FieldElement) -> bool:
        o = self._check(other)
        return self.spec.sort_key(self.value) < self.spec.sort_key(o.value)

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def render(self) -> str:
        return self.spec.render(self.value)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{self.render()} in {self.spec}"


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """
    Parse integer or ``num/den`` text into a canonical element.

    Over GF(p), ``a/b`` means ``a * b^-1 mod p``.
    """
    return FieldElement(spec, spec.parse_raw(text))


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def arith(op: str, x: FieldElement, y: FieldElement | None = None) -> FieldElement | bool:
    """
    Dispatch a named field operation.

    ``neg`` ignores ``y``; ``eq`` returns a bool.
    """
    if op == "neg":
        return -x
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if x.spec != y.spec:
        raise FieldMismatchError(f"mixed fields {x.spec} and {y.spec}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "eq":
        return x == y
    raise ValueError(f"unknown operation {op!r}")
