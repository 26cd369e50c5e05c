"""
Command pipelines behind the CLI.

Each ``run_*`` function turns one instance into a Report. Negative
mathematical answers come back as reports with ``negative`` set;
input problems and integrity failures are raised for the CLI layer to
map onto exit codes.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from leonard.algebra.matrix import tridiagonal_power_entry_check
from leonard.config.constants import (
    EXIT_INPUT_ERROR,
    EXIT_INTEGRITY,
    EXIT_NEGATIVE,
    EXIT_OK,
)
from leonard.core.errors import (
    ContextError,
    IdentityViolationError,
    InstanceFileError,
    IntegrityError,
    LeonardError,
    SpectralError,
)
from leonard.core.types import GeneratorFamily
from leonard.instances.generators import GeneratorConfig, generate
from leonard.io.models import FieldDescriptor, InstanceFile
from leonard.io.reports import Report, dumps, load_instance, write_json
from leonard.structure.context import (
    Context,
    minimal_polynomial_check,
    verify_leonard_pair,
    verify_leonard_system,
)
from leonard.structure.dagger import (
    basis_certificate,
    build_dagger,
    dagger_property_suite,
    generation_check,
)
from leonard.structure.delta import (
    DeltaGraph,
    build_delta,
    common_invariant_subspace,
    connectivity,
    invariant_subspace_sweep,
    is_tail,
    q_polynomial_certificates,
    q_polynomial_orderings,
)
from leonard.structure.qpoly import (
    WARN_CHAR_2,
    bracket_identity_check,
    condition_iii,
    decide,
    dual_idempotent_from_astar,
    gamma_delta,
    path_relation_check,
    theorem_equivalence_sweep,
    theta_beta_crosscheck,
)
from leonard.telemetry.metrics import MetricsCollector


logger = logging.getLogger(__name__)


@dataclass
class RunOptions:
    """Per-invocation knobs resolved from settings and flags."""

    field_override: str | None = None
    seed: int = 0
    dagger_samples: int = 50
    subset_sweep_cap: int = 12
    max_dimension: int = 64
    include_timing: bool = False
    metrics: MetricsCollector = field(default_factory=MetricsCollector)


# =============================================================================
# Loading
# =============================================================================


def with_field(instance: InstanceFile, descriptor: str) -> InstanceFile:
    """Reinterpret the instance's entries over another field."""
    data = instance.to_json_dict()
    data["field"] = FieldDescriptor.model_validate(descriptor).to_json()
    return InstanceFile.model_validate(data)


def load_for_run(path: Path, options: RunOptions) -> InstanceFile:
    instance = load_instance(path)
    if options.field_override is not None:
        instance = with_field(instance, options.field_override)
    if instance.d + 1 > options.max_dimension:
        raise InstanceFileError(f"d = {instance.d} exceeds the configured dimension limit", str(path))
    return instance


def _new_report(command: str, path: Path, instance: InstanceFile) -> Report:
    return Report(command=command, instance=instance.name or path.stem, field_label=instance.field_spec.label)


def _context_or_negative(instance: InstanceFile, report: Report, options: RunOptions) -> Context | None:
    """Build the context, or record why the data is not a valid context."""
    try:
        with options.metrics.timed("context"):
            ctx = instance.to_context()
    except (ContextError, SpectralError) as e:
        logger.info(f"{report.instance}: not a valid context ({e.code})")
        report.negative = True
        report.result["context_error"] = {"code": e.code, "message": e.message}
        return None
    if ctx.field.characteristic() == 2:
        report.warn(WARN_CHAR_2)
    return ctx


def _finish(report: Report, options: RunOptions) -> Report:
    for check in report.checks.checks:
        options.metrics.record_check(check.passed)
    options.metrics.record_verdict(not report.negative)
    if options.include_timing:
        report.timing = options.metrics.timing_dict()
    return report


# =============================================================================
# verify
# =============================================================================


def run_verify(path: Path, options: RunOptions) -> Report:
    """Leonard pair verdict plus the structural checks of a valid context."""
    instance = load_for_run(path, options)
    report = _new_report("verify", path, instance)

    if instance.is_pair_file:
        with options.metrics.timed("leonard_pair"):
            verdict = verify_leonard_pair(instance.matrix_A(), instance.matrix_Astar())
        report.result["leonard_pair"] = verdict.to_dict()
        if not verdict.is_pair:
            report.negative = True
            return _finish(report, options)

    ctx = _context_or_negative(instance, report, options)
    if ctx is None:
        return _finish(report, options)

    with options.metrics.timed("context_checks"):
        report.checks.add("dual_shape", ctx.dual_shape_holds())
        failed = ctx.eigen.violations()
        report.checks.add("idempotent_axioms", not failed, "; ".join(failed))
        if ctx.has_distinct_dual_eigenvalues():
            report.checks.add("minimal_polynomial", minimal_polynomial_check(ctx))
        report.checks.add("tridiagonal_powers", tridiagonal_power_entry_check(ctx.A))

    if not instance.is_pair_file:
        with options.metrics.timed("leonard_pair"):
            verdict = verify_leonard_pair(ctx.A, ctx.Astar)
        report.result["leonard_pair"] = verdict.to_dict()
        report.negative = not verdict.is_pair

    orderings = q_polynomial_orderings(build_delta(ctx))
    systems = [
        list(o) for o in orderings
        if verify_leonard_system(ctx, o, is_pair=verdict.is_pair).is_system
    ]
    report.result["context"] = ctx.to_dict()
    report.result["leonard_system_orderings"] = systems
    return _finish(report, options)


# =============================================================================
# delta
# =============================================================================


def _tails_table(g: DeltaGraph) -> list[dict[str, Any]]:
    return [is_tail(g, i, j).to_dict() for i in range(g.n_vertices) for j in range(g.n_vertices) if i != j]


def run_delta(path: Path, options: RunOptions) -> Report:
    """Delta edges, connectivity, tails, DOT text and the invariant-subspace sweep."""
    instance = load_for_run(path, options)
    report = _new_report("delta", path, instance)
    ctx = _context_or_negative(instance, report, options)
    if ctx is None:
        return _finish(report, options)

    with options.metrics.timed("delta"):
        g = build_delta(ctx)
    connected, components = connectivity(g)
    tails = _tails_table(g)
    if any(t["non_adjacent"] for t in tails):
        report.warn("non_adjacent_tail")

    report.result.update(
        {
            "delta": g.to_dict(),
            "connected": connected,
            "components": components,
            "is_path": bool(q_polynomial_orderings(g)),
            "tails": [t for t in tails if t["is_tail"]],
            "dot": g.to_dot(),
        }
    )

    witness = common_invariant_subspace(ctx, g)
    if witness is not None:
        subset, u = witness
        report.result["common_invariant_subspace"] = {"subset": sorted(subset), "dim": u.dim}

    if ctx.d <= options.subset_sweep_cap:
        with options.metrics.timed("subset_sweep"):
            checked = invariant_subspace_sweep(ctx, g)
        report.checks.add("invariant_subspace_correspondence", True, f"{checked} subsets")
    return _finish(report, options)


# =============================================================================
# decide
# =============================================================================


def _recurrence_checks(ctx: Context, g: DeltaGraph, report: Report, qpoly_context: bool) -> None:
    rec = gamma_delta(ctx.theta_star)
    report.result["recurrence"] = rec.to_dict()
    if not rec.is_concrete:
        return

    bracket_ok = bracket_identity_check(ctx, rec)
    report.checks.add("bracket_identity", bracket_ok)
    if not bracket_ok:
        raise IdentityViolationError("bracket identity fails although theta* satisfies the recurrences")

    if condition_iii(ctx):
        report.checks.add("dual_idempotent_polynomial", dual_idempotent_from_astar(ctx) == ctx.Estar(0))

    if qpoly_context:
        paths = path_relation_check(ctx, rec, g)
        report.result["path_relation"] = paths.to_dict()
        report.checks.add("path_relation", paths.passed, f"{len(paths.quadruples)} quadruples")
        if not paths.passed:
            raise IdentityViolationError("length-3 path relation fails on a Q-polynomial context")


def run_decide(path: Path, options: RunOptions, pair: tuple[int, int] | None = None) -> Report:
    """
    Decide one pair, or every ordered pair when ``pair`` is None.

    The report is negative when no decided pair is Q-polynomial.
    """
    instance = load_for_run(path, options)
    report = _new_report("decide", path, instance)
    ctx = _context_or_negative(instance, report, options)
    if ctx is None:
        return _finish(report, options)

    g = build_delta(ctx)
    certs = q_polynomial_certificates(ctx, g)
    with options.metrics.timed("decide"):
        if pair is None:
            sweep = theorem_equivalence_sweep(ctx, g)
            verdicts = sweep.verdicts
            report.result.update(sweep.to_dict())
        else:
            verdicts = [decide(ctx, pair, g, certs)]
            report.result["verdict"] = verdicts[0].to_dict()

    for v in verdicts:
        for w in v.warnings:
            report.warn(w)
    report.negative = not any(v.qpoly for v in verdicts)

    with options.metrics.timed("recurrence_checks"):
        _recurrence_checks(ctx, g, report, bool(certs))
    for ordering in sorted(set(certs.values())):
        label = "-".join(str(k) for k in ordering)
        report.checks.add(f"theta_beta_crosscheck:{label}", theta_beta_crosscheck(ctx, ordering))
    return _finish(report, options)


# =============================================================================
# dagger
# =============================================================================


def run_dagger(path: Path, options: RunOptions) -> Report:
    """
    Basis certificate, generation and the dagger identities.

    Raises:
        IdentityViolationError: a dagger identity fails.
    """
    instance = load_for_run(path, options)
    report = _new_report("dagger", path, instance)
    ctx = _context_or_negative(instance, report, options)
    if ctx is None:
        return _finish(report, options)

    with options.metrics.timed("basis_certificate"):
        report.checks.add("basis_certificate", basis_certificate(ctx))
        generation_check(ctx, ctx.Astar)
        report.checks.add("generates_Astar", True)

    with options.metrics.timed("dagger"):
        dagger = build_dagger(ctx)
        suite = dagger_property_suite(dagger, options.dagger_samples, options.seed)
    report.checks.checks.extend(suite.checks)
    report.result["conjugator_diagonal"] = [x.render() for x in dagger.diagonal]
    if not suite.passed:
        raise IdentityViolationError(f"dagger identities fail: {[c.name for c in suite.failures]}")
    return _finish(report, options)


# =============================================================================
# gen
# =============================================================================


def run_gen(config: GeneratorConfig, name: str | None = None) -> InstanceFile:
    ctx = generate(config)
    default = f"{config.family.value}_d{config.d}_{config.field_spec.label.replace(':', '')}"
    seeded = config.family in (GeneratorFamily.RANDOM_GFP, GeneratorFamily.COMPLETE_DELTA)
    return InstanceFile.from_context(
        ctx,
        name=name or (f"{default}_s{config.seed}" if seeded else default),
        family=config.family,
        seed=config.seed if seeded else None,
    )


# =============================================================================
# suite
# =============================================================================


@dataclass
class SuiteEntry:
    file: str
    exit_code: int
    mismatches: list[str] = field(default_factory=list)
    body: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def status(self) -> str:
        return {
            EXIT_OK: "ok",
            EXIT_NEGATIVE: "negative",
            EXIT_INPUT_ERROR: "input_error",
            EXIT_INTEGRITY: "integrity_violation",
        }[self.exit_code]

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"file": self.file, "status": self.status, "mismatches": self.mismatches}
        if self.error is not None:
            out["error"] = self.error
        return out


def _suite_file(path: Path, options: RunOptions) -> SuiteEntry:
    entry = SuiteEntry(file=path.name, exit_code=EXIT_OK)
    try:
        instance = load_for_run(path, options)
        verify = run_verify(path, options)
        decide_all = run_decide(path, options)
    except InstanceFileError as e:
        options.metrics.record_input_error()
        entry.exit_code, entry.error = EXIT_INPUT_ERROR, e.message
        return entry
    except IntegrityError as e:
        logger.error(f"{path.name}: integrity violation {e.code}: {e.message}")
        options.metrics.record_integrity_violation()
        entry.exit_code, entry.error = EXIT_INTEGRITY, e.message
        return entry
    except LeonardError as e:
        logger.warning(f"{path.name}: {e.code}: {e.message}")
        options.metrics.record_verdict(False)
        entry.exit_code, entry.error = EXIT_NEGATIVE, f"{e.code}: {e.message}"
        return entry

    entry.body = {"verify": verify.to_dict(), "decide": decide_all.to_dict()}
    is_pair = bool(verify.result.get("leonard_pair", {}).get("is_pair", False))
    positives = [tuple(p) for p in decide_all.result.get("positive_pairs", [])]

    expect = instance.expect
    if expect is None:
        entry.exit_code = EXIT_OK if verify.passed and decide_all.passed else EXIT_NEGATIVE
        return entry
    if expect.leonard_pair is not None and expect.leonard_pair != is_pair:
        entry.mismatches.append(f"leonard_pair: expected {expect.leonard_pair}, got {is_pair}")
    if expect.qpoly_pairs is not None and sorted(expect.qpoly_pairs) != sorted(positives):
        entry.mismatches.append(f"qpoly_pairs: expected {sorted(expect.qpoly_pairs)}, got {sorted(positives)}")
    if not (verify.checks.passed and decide_all.checks.passed):
        entry.mismatches.append("structural checks failed")
    entry.exit_code = EXIT_NEGATIVE if entry.mismatches else EXIT_OK
    return entry


def _compare_golden(entry: SuiteEntry, golden_dir: Path, update: bool) -> None:
    golden = golden_dir / entry.file
    if update:
        write_json(golden, entry.body)
        return
    if not golden.exists():
        entry.mismatches.append("golden report missing")
    elif golden.read_bytes() != dumps(entry.body):
        entry.mismatches.append("golden report differs")
    if entry.mismatches and entry.exit_code == EXIT_OK:
        entry.exit_code = EXIT_NEGATIVE


def run_suite(
    directory: Path,
    options: RunOptions,
    golden_dir: Path | None = None,
    update_golden: bool = False,
) -> tuple[list[SuiteEntry], int]:
    """
    verify and decide --all on every ``*.json`` file, sorted by name.

    Returns the entries and the summary exit code: the most severe of
    integrity violation, input error and negative outcome.
    """
    files = sorted(directory.glob("*.json"))
    if not files:
        raise InstanceFileError("no instance files found", str(directory))

    entries = []
    for path in files:
        entry = _suite_file(path, options)
        if golden_dir is not None and entry.exit_code in (EXIT_OK, EXIT_NEGATIVE):
            _compare_golden(entry, golden_dir, update_golden)
        logger.info(f"suite {path.name}: {entry.status}")
        entries.append(entry)

    codes = {e.exit_code for e in entries}
    for code in (EXIT_INTEGRITY, EXIT_INPUT_ERROR, EXIT_NEGATIVE):
        if code in codes:
            return entries, code
    return entries, EXIT_OK


def describe_error(e: LeonardError) -> dict[str, Any]:
    out: dict[str, Any] = {"code": e.code, "message": e.message}
    if isinstance(e, InstanceFileError) and e.location:
        out["location"] = e.location
    return out
