"""Exact scalars, polynomials, matrices and spectral data."""

from leonard.algebra.field import FieldElement, FieldKind, FieldSpec, parse_element
from leonard.algebra.matrix import BasisChange, ExactMatrix, ExactSubspace, represent
from leonard.algebra.polynomial import ExactPolynomial, RootReport, roots_in_field
from leonard.algebra.spectral import (
    Decomposition,
    EigenData,
    IdempotentSystem,
    eigen_split,
    primitive_idempotent,
)


__all__ = [
    "BasisChange",
    "Decomposition",
    "EigenData",
    "ExactMatrix",
    "ExactPolynomial",
    "ExactSubspace",
    "FieldElement",
    "FieldKind",
    "FieldSpec",
    "IdempotentSystem",
    "RootReport",
    "eigen_split",
    "parse_element",
    "primitive_idempotent",
    "represent",
    "roots_in_field",
]
