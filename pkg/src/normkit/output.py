"""
File output utilities for normkit.

Handles writing CSV results, reports and sidecars for the command line,
with consistent error handling and user feedback on the error stream.
"""

import os
from pathlib import Path
from typing import Optional, Sequence, Union

from rich.console import Console
from rich.markup import escape

from . import dataio
from .dataio import Dataset, ParamSidecar
from .exceptions import OutputError

# Diagnostics and progress go to stderr; stdout is reserved for results
console = Console(stderr=True, highlight=False, soft_wrap=True)


def configure_console(no_color: bool = False) -> Console:
    """Rebuild the diagnostic console, with all styling removed when no_color is set."""
    global console
    console = Console(
        stderr=True,
        color_system=None if no_color else "auto",
        highlight=False,
        soft_wrap=True,
    )
    return console


def _format_size(size: int) -> str:
    if size < 1024:
        return f"{size} bytes"
    if size < 1024 * 1024:
        return f"{size / 1024:.1f} KB"
    return f"{size / (1024 * 1024):.1f} MB"


class OutputWriter:
    """
    Handles writing normkit results to output files.

    Every method creates missing parent directories, maps file system
    failures to OutputError and reports what was saved.
    """

    @staticmethod
    def _prepare(filename: Union[str, Path]) -> Path:
        path = Path(filename)
        if not str(filename).strip():
            raise OutputError("output file name cannot be empty")

        try:
            path.parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise OutputError(f"cannot create directory for {path}: {e}")

        if path.is_dir():
            raise OutputError(f"{path} is a directory")
        if path.exists() and not os.access(path, os.W_OK):
            raise OutputError(f"no write permission for file: {path}")
        return path

    @staticmethod
    def _report(path: Path, what: str) -> None:
        try:
            size = f" ({_format_size(path.stat().st_size)})"
        except OSError:
            size = ""
        console.print(f"[green]✅ Saved {what} to '{escape(str(path))}'{size}[/green]")

    @staticmethod
    def write_csv(ds: Dataset, filename: Union[str, Path], decimals: Optional[int] = None) -> None:
        """
        Write a Dataset as CSV.

        Args:
            ds: Dataset to write
            filename: Output CSV path
            decimals: Round floats to this many places (None keeps full precision)

        Raises:
            OutputError: If the file cannot be written
        """
        path = OutputWriter._prepare(filename)
        dataio.write_csv(ds, path, decimals)
        OutputWriter._report(path, f"{ds.row_count} rows")

    @staticmethod
    def write_text(text: str, filename: Union[str, Path], what: str = "output") -> None:
        """
        Write a rendered report (Markdown table, SVG chart) to a file.

        Raises:
            OutputError: If the file cannot be written
        """
        path = OutputWriter._prepare(filename)
        try:
            with open(path, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
        except OSError as e:
            raise OutputError(f"cannot write {path}: {e}")
        OutputWriter._report(path, what)

    @staticmethod
    def write_sidecars(sidecars: Sequence[ParamSidecar], filename: Union[str, Path]) -> None:
        """
        Write normalization parameters to a sidecar file.

        Raises:
            OutputError: If the file cannot be written
        """
        path = OutputWriter._prepare(filename)
        dataio.save_sidecars(sidecars, path)
        OutputWriter._report(path, "parameters")
