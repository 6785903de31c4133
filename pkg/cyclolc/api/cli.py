"""
Command Line Interface for cyclotomic-lc
"""
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

import click
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from cyclolc.analysis.predictor import Verdict
from cyclolc.analysis.reference_data import ReferenceTable
from cyclolc.analysis.reproduce import (
    SweepSummary,
    grid_jobs,
    reproduce_examples,
    reproduce_table,
    run_jobs,
)
from cyclolc.arith.numtheory import SequenceParams
from cyclolc.config import CycloConfig
from cyclolc.errors import CycloError
from cyclolc.sequences.cyclotomy import Variant
from cyclolc.sequences.sequence import generate
from cyclolc.storage.report_store import ReportStore
from cyclolc.utils.log import setup_logging
from cyclolc.workflows.analysis_graph import analyze

console = Console()
err_console = Console(stderr=True)

EXIT_FAILED_CHECK = 1


@contextmanager
def reported_errors():
    """Turn library errors into a one-line reason and the error's exit code."""
    try:
        yield
    except CycloError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(exc.exit_code)


def _int_list(ctx, param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("expected an integer or a comma-separated list of integers")


def sequence_options(func):
    """--f/--e/--b/--g/--modified, shared by the commands that take one parameter set."""
    options = [
        click.option("--f", "f", type=int, help="Number of classes at level 1 (power of two)"),
        click.option("--e", "e", type=int, help="Class size; e*f = p-1"),
        click.option("--b", "b", type=int, default=0, show_default=True, help="Shift b"),
        click.option("--g", "g", type=int, help="Common odd primitive root (auto-selected when absent)"),
        click.option("--modified", is_flag=True, help="Use the modified sequence instead of the standard one"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _variant(modified: bool) -> Variant:
    return Variant.MODIFIED if modified else Variant.STANDARD


@click.group()
@click.option("--config", "-c", "config_path", type=click.Path(exists=True),
              help="Path to cyclo-config.yaml")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"]),
              help="Override the configured log level")
@click.pass_context
def cli(ctx, config_path, log_level):
    """Linear complexity of generalized cyclotomic sequences of period 2p^m."""
    with reported_errors():
        config = CycloConfig.load(config_path)
    if log_level:
        config.logging.level = log_level
    setup_logging(config.logging)
    ctx.obj = config


@cli.command()
@click.option("--p", "p", type=int, required=True, help="Odd prime p")
@click.option("--m", "m", type=int, required=True, help="Exponent m >= 1")
@sequence_options
@click.option("--format", "fmt", type=click.Choice(["ascii", "binary"]), default="ascii",
              show_default=True, help="Output format")
@click.option("--binary", is_flag=True, help="Shorthand for --format binary")
@click.option("--out", "-o", type=click.Path(), help="Write to this file instead of standard output")
def gen(p, m, f, e, b, g, modified, fmt, binary, out):
    """Print one period of the sequence."""
    with reported_errors():
        params = SequenceParams.build(p, m, f=f, e=e, b=b, g=g)
        seq = generate(params, _variant(modified))
        store = ReportStore(out)
        if binary or fmt == "binary":
            store.save_binary(seq)
        else:
            store.save_bitstring(seq)


@cli.command()
@click.option("--p", "p", type=int, required=True, help="Odd prime p")
@click.option("--m", "m", type=int, required=True, help="Exponent m >= 1")
@sequence_options
@click.option("--field-check", is_flag=True, help="Count zeros at roots of unity and check the field identities")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@click.option("--show-poly", is_flag=True, help="Also print the minimal polynomial")
@click.option("--out", "-o", type=click.Path(), help="Write to this file instead of standard output")
@click.pass_obj
def lc(config, p, m, f, e, b, g, modified, field_check, as_json, show_poly, out):
    """Measure the linear complexity and compare it with the theorems."""
    with reported_errors():
        params = SequenceParams.build(p, m, f=f, e=e, b=b, g=g)
        report = analyze(
            params,
            _variant(modified),
            with_field_check=field_check or config.analysis.field_check,
            config=config,
            keep_minimal_poly=show_poly,
        )

    if as_json:
        ReportStore(out).save_reports([report])
    elif out:
        Path(out).write_text(report.to_text() + "\n", encoding="utf-8")
    else:
        style = "red" if report.verdict == Verdict.VIOLATION else "green"
        console.print(Panel(report.to_text(), title="Linear complexity", border_style=style))

    if report.verdict == Verdict.VIOLATION:
        raise SystemExit(EXIT_FAILED_CHECK)


def _progress() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total}"),
        console=err_console,
    )


def _verify_tables(config: CycloConfig, quiet: bool) -> bool:
    passed = True
    for which in ReferenceTable:
        with _progress() as progress:
            task = progress.add_task(f"[cyan]{which.value}", total=None)
            result = reproduce_table(which, config, progress=lambda _: progress.advance(task))
        passed = passed and result.passed
        if quiet:
            continue
        table = Table(title=f"{which.value} ({which.variant.value})")
        for column in ("p", "m", "e", "g", "b", "expected", "measured", "status"):
            table.add_column(column, style="cyan" if column in ("p", "m", "e", "g", "b") else None)
        for outcome in result.outcomes:
            params = outcome.report.params
            status = "[green]ok[/green]" if outcome.passed else "[red]FAIL[/red]"
            table.add_row(str(params.p), str(params.m), str(params.e), str(params.g), str(params.b),
                          str(outcome.expected), str(outcome.report.lc), status)
        console.print(table)
    return passed


def _verify_examples(config: CycloConfig, quiet: bool) -> bool:
    result = reproduce_examples(config)
    if not quiet:
        table = Table(title="Reference examples")
        table.add_column("example", style="cyan")
        table.add_column("variant")
        table.add_column("bits")
        table.add_column("LC")
        table.add_column("status")
        for outcome in result.outcomes:
            bits = "exact" if outcome.first_divergence is None else f"differs at {outcome.first_divergence}"
            status = "[green]ok[/green]" if outcome.passed else "[red]FAIL[/red]"
            table.add_row(outcome.name, outcome.variant.value, bits,
                          f"{outcome.report.lc} / {outcome.expected_lc}", status)
        console.print(table)
    return result.passed


@cli.command()
@click.option("--p", "p", callback=_int_list, help="Odd prime p, or a comma-separated list")
@click.option("--m", "m", callback=_int_list, help="Exponent m, or a comma-separated list")
@sequence_options
@click.option("--all-b", is_flag=True, help="Sweep every shift b in [0, d_m)")
@click.option("--field-check", is_flag=True, help="Run the field identity suite on every instance")
@click.option("--reference-tables", "--paper-tables", "tables", is_flag=True,
              help="Reproduce both reference LC tables")
@click.option("--reference-examples", "--paper-examples", "examples", is_flag=True,
              help="Reproduce the reference example sequences")
@click.option("--json", "as_json", is_flag=True, help="Write one JSON report per grid instance")
@click.option("--out", "-o", type=click.Path(), help="Write JSON reports to this file")
@click.pass_obj
def verify(config, p, m, f, e, b, g, modified, all_b, field_check, tables, examples, as_json, out):
    """Check the theorems over a parameter grid or against the reference data."""
    if not (p or tables or examples):
        raise click.UsageError("give --p/--m for a grid, --reference-tables or --reference-examples")
    if p and not m:
        raise click.UsageError("--m is required with --p")
    if field_check:
        config.analysis.field_check = True

    passed = True
    quiet = as_json and not out
    with reported_errors():
        if p:
            jobs = grid_jobs(p, m, f=f, e=e, bs=None if all_b else [b], g=g,
                             variant=_variant(modified), max_analyses=config.verify.max_analyses)
            with _progress() as progress:
                task = progress.add_task("[cyan]Analyzing grid", total=len(jobs))
                reports = run_jobs(jobs, config, progress=lambda _: progress.advance(task))
            summary = SweepSummary(reports=reports)
            passed = summary.passed
            if as_json:
                ReportStore(out).save_reports(reports)
            if not quiet:
                _print_summary(summary)
        if tables:
            passed = _verify_tables(config, quiet) and passed
        if examples:
            passed = _verify_examples(config, quiet) and passed

    if not passed:
        err_console.print("[bold red]verification failed[/bold red]")
        raise SystemExit(EXIT_FAILED_CHECK)


def _print_summary(summary: SweepSummary):
    table = Table(title=f"Grid verification ({len(summary.reports)} analyses)")
    table.add_column("Verdict", style="cyan")
    table.add_column("Count", style="green")
    for verdict, count in summary.counts().items():
        table.add_row(verdict, str(count))
    console.print(table)
    for report in summary.violations:
        console.print(f"[bold red]VIOLATION[/bold red] {report.params.label()} "
                      f"{report.variant.value}: LC={report.lc}, predicted {report.prediction.describe()}")
    for report in summary.conjecture_mismatches:
        console.print(f"[yellow]conjecture mismatch[/yellow] {report.params.label()} "
                      f"{report.variant.value}: LC={report.lc}, conjectured {report.prediction.conjectured}")


@cli.command()
@click.option("--output", "-o", type=click.Path(), default="./cyclo-config.yaml",
              help="Output path for config file")
@click.pass_obj
def init(config, output):
    """Write the effective configuration to a YAML file."""
    config.to_yaml(output)
    console.print(f"[green]✓ Created configuration file: {output}[/green]")


@cli.command()
def version():
    """Show version information"""
    from cyclolc import __version__
    console.print(f"cyclotomic-lc v{__version__}")


def main():
    """Entry point for CLI."""
    cli()


if __name__ == "__main__":
    main()
