"""
Command-line interface for Lens Alexander.
"""

import logging
from typing import Optional

import typer
from colorama import Fore, Style
from pydantic import ValidationError

from lens_alexander.cli.batch import BatchDefaults, run_batch
from lens_alexander.cli.rendering import describe_oracle, render_diagnostics, render_result
from lens_alexander.errors.exceptions import (
    BusinessError,
    ConfigError,
    LensAlexanderError,
    NotDivisibleError,
    OracleDisagreementError,
)
from lens_alexander.models.job import JobSpec, Mode, OutputFormat
from lens_alexander.pipelines.factory import PipelineFactory
from lens_alexander.representations.burau import rho_relations_hold
from lens_alexander.utils.logging import configure_logging, get_logger
from lens_alexander.utils.settings import Settings

app = typer.Typer(help="Alexander polynomials of links in lens spaces")
logger = get_logger(__name__)

EXIT_INVALID = 1
EXIT_NOT_DIVISIBLE = 2
EXIT_ORACLE = 3


def error(message: str, exit_code: Optional[int] = None) -> None:
    """Display an error message and optionally exit."""
    typer.echo(f"{Fore.RED}Error: {message}{Style.RESET_ALL}", err=True)
    if exit_code is not None:
        raise typer.Exit(code=exit_code)


def warning(message: str) -> None:
    """Display a warning message."""
    typer.echo(f"{Fore.YELLOW}Warning: {message}{Style.RESET_ALL}", err=True)


def success(message: str) -> None:
    """Display a success message."""
    typer.echo(f"{Fore.GREEN}{message}{Style.RESET_ALL}", err=True)


def _settings() -> Settings:
    try:
        return Settings.from_env()
    except ConfigError as e:
        error(str(e), exit_code=EXIT_INVALID)


def version_callback(value: bool):
    """
    Display version information.

    Args:
        value: Whether to display version information
    """
    if value:
        from lens_alexander import __version__

        typer.echo(f"Lens Alexander v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version information and exit.",
    ),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose output."),
):
    """
    Lens Alexander - Alexander polynomials from mixed braid words.
    """
    settings = _settings()
    configure_logging(logging.DEBUG if verbose else settings.log_level)


@app.command("compute")
def compute(
    word: str = typer.Option("", "--word", "-w", help="Braid word, e.g. 't s1^3'"),
    n: int = typer.Option(..., "--n", "-n", help="Moving strands (mixed modes) or strands (classical modes)"),
    mode: Mode = typer.Option(Mode.LENS, "--mode", "-m", help="Invariant to compute"),
    p: Optional[int] = typer.Option(None, "--p", help="Lens space order p (lens mode)"),
    q: Optional[int] = typer.Option(None, "--q", help="Lens space twist q (lens mode)"),
    oracle: bool = typer.Option(False, "--oracle", help="Cross-check with Fox calculus"),
    format: OutputFormat = typer.Option(OutputFormat.PLAIN, "--format", "-f", help="Output format"),
    verify: bool = typer.Option(False, "--verify", help="Compute both lens routes and compare"),
) -> None:
    """Compute one invariant and print it."""
    settings = _settings()
    try:
        job = JobSpec(word=word, n=n, p=p, q=q, mode=mode, oracle=oracle, format=format, verify=verify)
    except ValidationError as e:
        error("; ".join(err["msg"] for err in e.errors()), exit_code=EXIT_INVALID)

    pipeline = PipelineFactory.create_pipeline(job, verify_paths=settings.verify_paths)
    try:
        pipeline.run()
    except NotDivisibleError as e:
        logger.warning("NotDivisible finding", word=word, **e.details)
        error(e.message, exit_code=EXIT_NOT_DIVISIBLE)
    except BusinessError as e:
        # route_mismatch shares the cross-check exit status.
        code = EXIT_ORACLE if e.code == "route_mismatch" else EXIT_NOT_DIVISIBLE
        error(f"{e.code}: {e.message}", exit_code=code)
    except LensAlexanderError as e:
        error(str(e), exit_code=EXIT_INVALID)

    typer.echo(render_result(pipeline, format))
    if format is not OutputFormat.JSON:
        for line in render_diagnostics(pipeline, format):
            typer.echo(line, err=True)

    status = describe_oracle(pipeline)
    if status is None:
        if oracle:
            warning(f"no oracle for mode {mode.value}")
        return
    try:
        pipeline.require_oracle_agreement()
    except OracleDisagreementError as e:
        error(e.message, exit_code=EXIT_ORACLE)
    success(status)


@app.command("batch")
def batch(
    file: str = typer.Argument(..., help="Input file, one braid word per line"),
    n: Optional[int] = typer.Option(None, "--n", "-n", help="Default strand count"),
    mode: Mode = typer.Option(Mode.LENS, "--mode", "-m", help="Invariant to compute"),
    p: Optional[int] = typer.Option(None, "--p", help="Default lens order p"),
    q: Optional[int] = typer.Option(None, "--q", help="Default lens twist q"),
    oracle: bool = typer.Option(False, "--oracle", help="Cross-check every line with Fox calculus"),
    verify: bool = typer.Option(False, "--verify", help="Compute both lens routes and compare"),
) -> None:
    """Tabulate one JSON record per input line."""
    settings = _settings()
    try:
        with open(file, "r", encoding="utf-8") as f:
            lines = f.readlines()
    except (OSError, UnicodeDecodeError) as e:
        error(f"Cannot read {file}: {e}", exit_code=EXIT_INVALID)

    defaults = BatchDefaults(
        n=n, p=p, q=q, mode=mode, oracle=oracle, verify=verify or settings.verify_paths
    )
    for record in run_batch(lines, defaults, threads=settings.threads):
        typer.echo(record.to_json_line())


@app.command("relations")
def relations(
    n: int = typer.Option(..., "--n", "-n", min=1, help="Moving strand count"),
) -> None:
    """Check rho on every defining relation of the mixed braid group."""
    checks = rho_relations_hold(n)
    for check in checks:
        rel = check.relation
        mark = "ok" if check.holds else "FAIL"
        typer.echo(f"{rel.family}: {rel.lhs} = {rel.rhs} {mark}")
    failed = [c for c in checks if not c.holds]
    if failed:
        error(f"{len(failed)} of {len(checks)} relations fail", exit_code=EXIT_INVALID)
    success(f"All {len(checks)} relations hold for n = {n}")
