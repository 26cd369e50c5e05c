"""
Typer application: ``verify``, ``delta``, ``decide``, ``dagger``, ``gen`` and ``suite``.

Reports go to stdout (or ``--out``); logs go to stderr. Exit codes:
0 all checks pass, 1 negative verdict, 2 input error, 3 integrity violation.
"""

import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Annotated

import click
import typer
from pydantic import ValidationError

from leonard.cli.commands import (
    RunOptions,
    describe_error,
    run_dagger,
    run_decide,
    run_delta,
    run_gen,
    run_suite,
    run_verify,
)
from leonard.config.constants import (
    EXIT_INPUT_ERROR,
    EXIT_INTEGRITY,
    EXIT_NEGATIVE,
    EXIT_OK,
)
from leonard.config.settings import Settings, get_settings
from leonard.core.errors import (
    ContextError,
    DimensionLimitError,
    FieldError,
    GeneratorError,
    GraphError,
    InstanceFileError,
    IntegrityError,
    LeonardError,
    RetryBudgetExhaustedError,
    SpectralError,
)
from leonard.core.types import GeneratorFamily
from leonard.instances.generators import GeneratorConfig
from leonard.io.reports import Report, dumps, write_instance
from leonard.telemetry.logger import setup_logging
from leonard.telemetry.reporter import SuiteSummary, TextReporter


logger = logging.getLogger(__name__)


app = typer.Typer(
    name="leonard",
    help="Leonard pairs, the graph Delta and Q-polynomial tails over Q and GF(p).",
    no_args_is_help=True,
    add_completion=False,
)


# =============================================================================
# Shared Options
# =============================================================================

FieldOption = Annotated[
    str | None,
    typer.Option("--field", help="Override the instance field: rational or gfp:P"),
]
SeedOption = Annotated[int, typer.Option("--seed", min=0, help="Seed for sampled checks")]
OutOption = Annotated[Path | None, typer.Option("--out", help="Write output here instead of stdout")]
JsonOption = Annotated[bool, typer.Option("--json", help="Write the JSON report")]
TextOption = Annotated[bool, typer.Option("--text", help="Write the text panel")]
TimingOption = Annotated[bool, typer.Option("--timing", help="Include per-check timings")]


def _options(settings: Settings, field: str | None, seed: int, timing: bool) -> RunOptions:
    return RunOptions(
        field_override=field,
        seed=seed,
        dagger_samples=settings.dagger_samples,
        subset_sweep_cap=settings.subset_sweep_cap,
        max_dimension=settings.max_dimension,
        include_timing=timing or settings.include_timing,
    )


def _wants_json(settings: Settings, as_json: bool, as_text: bool) -> bool:
    """Explicit flags win over the configured format; --text wins over --json."""
    if as_text:
        return False
    return as_json or settings.report_format == "json"


def _emit_text(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")


def _emit(report: Report, settings: Settings, as_json: bool, as_text: bool, out: Path | None, timing: bool) -> None:
    if _wants_json(settings, as_json, as_text):
        _emit_text(report.to_json(include_timing=timing).decode(), out)
    else:
        _emit_text(TextReporter().render(report) + "\n", out)


def _fail(e: LeonardError | ValidationError, code: int) -> int:
    body = describe_error(e) if isinstance(e, LeonardError) else {"code": "input_error", "message": str(e)}
    typer.echo(dumps({"error": body}).decode(), err=True, nl=False)
    return code


def _execute(action: Callable[[], int]) -> None:
    """Run a command body and exit with the code its outcome maps to."""
    try:
        code = action()
    except IntegrityError as e:
        logger.error(f"integrity violation: {e.code}: {e.message}")
        code = _fail(e, EXIT_INTEGRITY)
    except RetryBudgetExhaustedError as e:
        code = _fail(e, EXIT_NEGATIVE)
    except (InstanceFileError, FieldError, GraphError, GeneratorError, DimensionLimitError) as e:
        code = _fail(e, EXIT_INPUT_ERROR)
    except ValidationError as e:
        code = _fail(e, EXIT_INPUT_ERROR)
    except (ContextError, SpectralError) as e:
        code = _fail(e, EXIT_NEGATIVE)
    raise typer.Exit(code)


@app.callback()
def main_callback(
    ctx: typer.Context,
    log_level: Annotated[
        str | None,
        typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    ] = None,
) -> None:
    """Set up stderr logging for the invoked command."""
    settings = get_settings()
    log_file = Path(settings.log_file) if settings.log_file else None
    queued = setup_logging(log_level or settings.log_level, log_file)
    ctx.call_on_close(queued.stop)


# =============================================================================
# Commands
# =============================================================================


@app.command()
def verify(
    path: Annotated[Path, typer.Argument(help="Instance file")],
    field: FieldOption = None,
    seed: SeedOption = 0,
    out: OutOption = None,
    as_json: JsonOption = False,
    as_text: TextOption = False,
    timing: TimingOption = False,
) -> None:
    """Leonard pair verdict and the structural checks of the context."""
    settings = get_settings()

    def action() -> int:
        report = run_verify(path, _options(settings, field, seed, timing))
        _emit(report, settings, as_json, as_text, out, timing)
        return report.exit_code

    _execute(action)


@app.command()
def delta(
    path: Annotated[Path, typer.Argument(help="Instance file")],
    field: FieldOption = None,
    seed: SeedOption = 0,
    out: OutOption = None,
    as_json: JsonOption = False,
    as_text: TextOption = False,
    timing: TimingOption = False,
    dot: Annotated[Path | None, typer.Option("--dot", help="Also write Delta as DOT")] = None,
) -> None:
    """Delta, its tails, connectivity and the invariant-subspace correspondence."""
    settings = get_settings()

    def action() -> int:
        report = run_delta(path, _options(settings, field, seed, timing))
        if dot is not None and "dot" in report.result:
            _emit_text(str(report.result["dot"]), dot)
        _emit(report, settings, as_json, as_text, out, timing)
        return report.exit_code

    _execute(action)


@app.command()
def decide(
    path: Annotated[Path, typer.Argument(help="Instance file")],
    i: Annotated[int | None, typer.Argument(help="First vertex")] = None,
    j: Annotated[int | None, typer.Argument(help="Second vertex")] = None,
    all_pairs: Annotated[bool, typer.Option("--all", help="Decide every ordered pair")] = False,
    field: FieldOption = None,
    seed: SeedOption = 0,
    out: OutOption = None,
    as_json: JsonOption = False,
    as_text: TextOption = False,
    timing: TimingOption = False,
) -> None:
    """Whether (E_i, E_j) is Q-polynomial, cross-checked against Delta."""
    settings = get_settings()
    if all_pairs == (i is not None and j is not None) or (i is None) != (j is None):
        typer.echo("give either two vertices or --all", err=True)
        raise typer.Exit(EXIT_INPUT_ERROR)

    def action() -> int:
        pair = None if all_pairs or i is None or j is None else (i, j)
        report = run_decide(path, _options(settings, field, seed, timing), pair)
        _emit(report, settings, as_json, as_text, out, timing)
        return report.exit_code

    _execute(action)


@app.command()
def dagger(
    path: Annotated[Path, typer.Argument(help="Instance file")],
    field: FieldOption = None,
    seed: SeedOption = 0,
    out: OutOption = None,
    as_json: JsonOption = False,
    as_text: TextOption = False,
    timing: TimingOption = False,
) -> None:
    """Basis certificate and the antiautomorphism identities."""
    settings = get_settings()

    def action() -> int:
        report = run_dagger(path, _options(settings, field, seed, timing))
        _emit(report, settings, as_json, as_text, out, timing)
        return report.exit_code

    _execute(action)


@app.command()
def gen(
    family: Annotated[GeneratorFamily, typer.Argument(help="Instance family")],
    d: Annotated[int, typer.Option("--d", min=1, help="Diameter d; matrices are (d+1)x(d+1)")],
    field: FieldOption = None,
    seed: SeedOption = 0,
    out: OutOption = None,
    name: Annotated[str | None, typer.Option("--name", help="Instance name")] = None,
) -> None:
    """Generate an instance file."""
    settings = get_settings()

    def action() -> int:
        descriptor = field
        if descriptor is None:
            rational = family in (GeneratorFamily.KRAWTCHOUK, GeneratorFamily.CUSTOM)
            descriptor = "rational" if rational else f"gfp:{settings.default_prime}"
        config = GeneratorConfig(
            family=family,
            d=d,
            field=descriptor,
            seed=seed,
            max_retries=settings.max_retries,
        )
        instance = run_gen(config, name)
        if out is None:
            typer.echo(dumps(instance.to_json_dict()).decode(), nl=False)
        else:
            write_instance(out, instance)
            logger.info(f"wrote {out}")
        return EXIT_OK

    _execute(action)


@app.command()
def suite(
    directory: Annotated[Path, typer.Argument(help="Directory of instance files")],
    field: FieldOption = None,
    seed: SeedOption = 0,
    out: OutOption = None,
    as_json: JsonOption = False,
    as_text: TextOption = False,
    timing: TimingOption = False,
    golden: Annotated[Path | None, typer.Option("--golden", help="Golden report directory")] = None,
    update_golden: Annotated[bool, typer.Option("--update-golden", help="Rewrite golden reports")] = False,
) -> None:
    """verify and decide --all over every instance file in a directory."""
    settings = get_settings()

    def action() -> int:
        options = _options(settings, field, seed, timing)
        entries, code = run_suite(directory, options, golden, update_golden)
        if _wants_json(settings, as_json, as_text):
            body = {"files": [e.to_dict() for e in entries], "exit_code": code}
            if options.include_timing:
                body["metrics"] = options.metrics.to_dict()
            _emit_text(dumps(body).decode(), out)
        else:
            summary = SuiteSummary(options.metrics).render([(e.file, e.status) for e in entries])
            _emit_text(summary + "\n", out)
        return code

    _execute(action)


def run() -> int:
    """Invoke the app without letting click call ``sys.exit``."""
    try:
        result = app(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT_ERROR
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
