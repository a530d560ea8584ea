"""
normkit - CLI Module

This module provides the command-line interface: read a CSV data set,
scale columns down with one of four normalization methods, compare methods
side by side, and scale normalized data back up from its saved parameters.

Exit codes: 0 success, 1 data or processing error, 2 usage error.
"""

import traceback
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, List, Optional

import click
import typer
from rich.markup import escape

from . import __version__
from .config import (
    DECIMAL,
    DEFAULT_DECIMALS,
    DEFAULT_TARGET_HIGH,
    DEFAULT_TARGET_LOW,
    INTSCALE,
    MAX_DECIMALS,
    MINMAX,
    NO_COLOR_ENV,
    SIDECAR_SUFFIX,
    ZSCORE,
)
from .dataio import Dataset, ParamSidecar, format_number, load_sidecars, read_csv
from .exceptions import (
    DataProcessingError,
    MethodMismatchError,
    NormkitError,
    OutputError,
    ValidationError,
)
from .normcore import NumericColumn, fit_decimal_scaling, fit_z_score
from . import output as feedback
from .output import OutputWriter
from .report import compare, default_title, render_markdown, render_svg_chart, table_to_dataset
from .scalers import make_scaler, scaler_from_params
from .validation import InputValidator

app = typer.Typer(
    help="Normalize numeric CSV columns with Min-Max, Z-score, Decimal Scaling "
    "or Integer Scaling, and compare the methods.",
    add_completion=False,
    no_args_is_help=True,
)


class Method(str, Enum):
    minmax = MINMAX
    zscore = ZSCORE
    decimal = DECIMAL
    intscale = INTSCALE


def run_cli():
    """Entry point for the CLI when installed as a package."""
    app()


def _version_callback(value: bool):
    if value:
        typer.echo(f"normkit {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True,
        help="Show the version and exit.",
    ),
    no_color: bool = typer.Option(
        False, "--no-color", envvar=NO_COLOR_ENV, help="Print diagnostics without any styling.",
    ),
):
    """Dataset normalization toolkit."""
    feedback.configure_console(no_color)


@contextmanager
def _reporting_errors(debug: bool) -> Iterator[None]:
    """Turn errors into a one-line diagnostic and the matching exit code."""
    try:
        yield
    except (typer.Exit, click.exceptions.ClickException):
        raise
    except ValidationError as e:
        _print_error(e)
        feedback.console.print("[yellow]💡 Tip: Check the column values and the method options[/yellow]")
        raise typer.Exit(code=1)
    except DataProcessingError as e:
        _print_error(e)
        feedback.console.print(
            "[yellow]💡 Tip: Check that the input is well-formed CSV and the sidecar belongs to it[/yellow]"
        )
        raise typer.Exit(code=1)
    except OutputError as e:
        _print_error(e)
        feedback.console.print("[yellow]💡 Tip: Check file permissions and available disk space[/yellow]")
        raise typer.Exit(code=1)
    except NormkitError as e:
        _print_error(e)
        raise typer.Exit(code=1)
    except KeyboardInterrupt:
        feedback.console.print("\n[yellow]⚠️ Operation cancelled by user[/yellow]")
        raise typer.Exit(code=130)
    except Exception as e:
        feedback.console.print(f"[bold red]❌ Unexpected Error:[/bold red] {escape(str(e))}")
        if debug:
            feedback.console.print(f"[red]Traceback:[/red] {escape(traceback.format_exc())}")
        feedback.console.print("[yellow]💡 This is an unexpected error. Please report this issue.[/yellow]")
        raise typer.Exit(code=1)


def _print_error(e: NormkitError) -> None:
    feedback.console.print(f"[bold red]❌ {e.code}:[/bold red] {escape(str(e))}")


def _read(path: Path, header: bool, debug: bool) -> Dataset:
    ds = read_csv(path, has_header=header)
    if debug:
        feedback.console.log(
            f"[cyan]Read {ds.row_count} rows, columns: {escape(', '.join(ds.names))}[/cyan]"
        )
    return ds


def _methods_callback(value: str) -> List[str]:
    try:
        return InputValidator.validate_methods(value)
    except ValidationError as e:
        raise typer.BadParameter(str(e))


@app.command()
def normalize(
    method: Method = typer.Option(..., "--method", "-m", help="Normalization method."),
    input: Path = typer.Option(..., "--input", "-i", help="CSV file to read."),
    output: Path = typer.Option(..., "--output", "-o", help="CSV file to write."),
    column: Optional[List[str]] = typer.Option(
        None, "--column", help="Column name or zero-based index; repeatable. Default: all."
    ),
    c: float = typer.Option(DEFAULT_TARGET_LOW, "--c", help="Min-Max lower bound C."),
    d: float = typer.Option(DEFAULT_TARGET_HIGH, "--d", help="Min-Max upper bound D."),
    decimals: int = typer.Option(
        DEFAULT_DECIMALS, "--decimals", min=0, max=MAX_DECIMALS, help="Round written values."
    ),
    full_precision: bool = typer.Option(
        False, "--full-precision",
        help="Write unrounded values, so the file can be denormalized exactly. Overrides --decimals.",
    ),
    meta: Optional[Path] = typer.Option(
        None, "--meta", help=f"Sidecar path. Default: output path with {SIDECAR_SUFFIX}."
    ),
    header: bool = typer.Option(True, "--header/--no-header", help="First CSV row holds names."),
    debug: bool = typer.Option(False, "--debug", help="Enable debug logging."),
):
    """
    Scale columns down and save the parameters needed to scale them back up.

    The output CSV keeps the input columns and appends one <name>_<method>
    column per normalized column.
    """
    with _reporting_errors(debug):
        ds = _read(input, header, debug)

        normalized = []
        sidecars = []
        for col in ds.select(column):
            scaler = make_scaler(method.value, (c, d))
            norm = scaler.fit_transform(col)
            normalized.append(NumericColumn(f"{col.name}_{method.value}", norm.values))
            sidecars.append(ParamSidecar.from_normalized(norm))
            if debug:
                feedback.console.log(f"[cyan]{escape(col.name)}: {escape(repr(scaler.params))}[/cyan]")

        OutputWriter.write_csv(
            ds.with_columns(normalized), output, None if full_precision else decimals
        )
        OutputWriter.write_sidecars(sidecars, meta or output.with_suffix(SIDECAR_SUFFIX))


@app.command()
def denormalize(
    input: Path = typer.Option(..., "--input", "-i", help="Normalized CSV file to read."),
    output: Path = typer.Option(..., "--output", "-o", help="CSV file to write."),
    meta: Optional[Path] = typer.Option(
        None, "--meta", help=f"Sidecar path. Default: input path with {SIDECAR_SUFFIX}."
    ),
    column: Optional[List[str]] = typer.Option(
        None, "--column",
        help="Normalized column per sidecar section, in order. Default: <name>_<method>, then <name>.",
    ),
    method: Optional[Method] = typer.Option(
        None, "--method", "-m", help="Fail unless the sidecar was written by this method."
    ),
    decimals: Optional[int] = typer.Option(
        None, "--decimals", min=0, max=MAX_DECIMALS, help="Round written values."
    ),
    header: bool = typer.Option(True, "--header/--no-header", help="First CSV row holds names."),
    debug: bool = typer.Option(False, "--debug", help="Enable debug logging."),
):
    """Scale normalized columns back up using their saved parameters."""
    with _reporting_errors(debug):
        sidecars = load_sidecars(meta or input.with_suffix(SIDECAR_SUFFIX))
        for sidecar in sidecars:
            if method is not None and sidecar.method != method.value:
                raise MethodMismatchError(
                    f"sidecar for column '{sidecar.column}' was written by "
                    f"{sidecar.method}, not {method.value}"
                )
        if column:
            InputValidator.validate_length(len(sidecars), len(column), "--column selectors")

        ds = _read(input, header, debug)
        restored = []
        for position, sidecar in enumerate(sidecars):
            source = ds.column(column[position] if column else _normalized_name(ds, sidecar))
            InputValidator.validate_length(sidecar.rows, len(source), f"column '{source.name}'")
            values = scaler_from_params(sidecar.params).inverse_transform(source).values
            restored.append(NumericColumn(sidecar.column, values))

        OutputWriter.write_csv(Dataset(restored), output, decimals)


def _normalized_name(ds: Dataset, sidecar: ParamSidecar) -> str:
    candidate = f"{sidecar.column}_{sidecar.method}"
    return candidate if candidate in ds.names else sidecar.column


@app.command("compare")
def compare_command(
    methods: str = typer.Option(
        ..., "--methods", callback=_methods_callback,
        help="Comma-separated methods, e.g. minmax,intscale.",
    ),
    input: Path = typer.Option(..., "--input", "-i", help="CSV file to read."),
    column: Optional[str] = typer.Option(
        None, "--column", help="Column name or zero-based index. Default: first column."
    ),
    c: float = typer.Option(DEFAULT_TARGET_LOW, "--c", help="Min-Max lower bound C."),
    d: float = typer.Option(DEFAULT_TARGET_HIGH, "--d", help="Min-Max upper bound D."),
    decimals: int = typer.Option(
        DEFAULT_DECIMALS, "--decimals", min=0, max=MAX_DECIMALS, help="Display rounding."
    ),
    table: Optional[Path] = typer.Option(None, "--table", help="Write a Markdown table."),
    csv_path: Optional[Path] = typer.Option(None, "--csv", help="Write a CSV table."),
    plot: Optional[Path] = typer.Option(None, "--plot", help="Write an SVG line chart."),
    title: Optional[str] = typer.Option(None, "--title", help="Chart title."),
    header: bool = typer.Option(True, "--header/--no-header", help="First CSV row holds names."),
    debug: bool = typer.Option(False, "--debug", help="Enable debug logging."),
):
    """Compare methods on one column as a table and/or a chart."""
    if not (table or csv_path or plot):
        raise typer.BadParameter(
            "give at least one of --table, --csv or --plot", param_hint="'--table/--csv/--plot'"
        )

    with _reporting_errors(debug):
        ds = _read(input, header, debug)
        col = ds.column(column) if column is not None else ds.columns[0]
        result = compare(col, methods, (c, d))

        if table:
            OutputWriter.write_text(render_markdown(result, decimals), table, "table")
        if csv_path:
            OutputWriter.write_csv(table_to_dataset(result), csv_path, decimals)
        if plot:
            chart = render_svg_chart(result, title if title is not None else default_title(result))
            OutputWriter.write_text(chart, plot, "chart")


def _stat(value) -> str:
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    return format_number(value)


@app.command()
def stats(
    input: Path = typer.Option(..., "--input", "-i", help="CSV file to read."),
    column: Optional[List[str]] = typer.Option(
        None, "--column", help="Column name or zero-based index; repeatable. Default: all."
    ),
    header: bool = typer.Option(True, "--header/--no-header", help="First CSV row holds names."),
    debug: bool = typer.Option(False, "--debug", help="Enable debug logging."),
):
    """Print count, min, max, mean, sample std and decimal-scaling j per column."""
    with _reporting_errors(debug):
        ds = _read(input, header, debug)
        blocks = []
        for col in ds.select(column):
            z_params = fit_z_score(col)
            lines = [
                f"column={col.name}",
                f"count={len(col)}",
                f"min={_stat(min(col.values))}",
                f"max={_stat(max(col.values))}",
                f"mean={_stat(z_params.mean)}",
                f"std={_stat(z_params.std)}",
                f"j={fit_decimal_scaling(col).j}",
            ]
            blocks.append("\n".join(lines))
        typer.echo("\n\n".join(blocks))
