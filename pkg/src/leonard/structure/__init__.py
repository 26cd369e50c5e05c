"""Contexts, the dagger map, the graph Delta and the Q-polynomial decision."""

from leonard.structure.context import (
    Context,
    LeonardVerdict,
    build_context,
    context_from_pair,
    relabel_context,
    verify_leonard_pair,
    verify_leonard_system,
)
from leonard.structure.dagger import DaggerData, basis_certificate, build_dagger, dagger_property_suite
from leonard.structure.delta import DeltaGraph, TailReport, build_delta, is_tail, q_polynomial_pairs
from leonard.structure.qpoly import (
    QPolyVerdict,
    RecurrenceData,
    SweepReport,
    beta_solve,
    decide,
    gamma_delta,
    theorem_equivalence_sweep,
)


__all__ = [
    "Context",
    "DaggerData",
    "DeltaGraph",
    "LeonardVerdict",
    "QPolyVerdict",
    "RecurrenceData",
    "SweepReport",
    "TailReport",
    "basis_certificate",
    "beta_solve",
    "build_context",
    "build_dagger",
    "build_delta",
    "context_from_pair",
    "dagger_property_suite",
    "decide",
    "gamma_delta",
    "is_tail",
    "q_polynomial_pairs",
    "relabel_context",
    "theorem_equivalence_sweep",
    "verify_leonard_pair",
    "verify_leonard_system",
]
