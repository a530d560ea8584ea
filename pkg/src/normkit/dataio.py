"""
CSV ingestion and emission of numeric columns, plus parameter sidecars.

CSV input is UTF-8, comma separated, with an optional header row. Blank
lines and lines starting with ``#`` are skipped, ``\\n`` and ``\\r\\n`` are
both accepted, and numbers may use exponent notation. Output always uses
``\\n`` and plain positional notation.

Sidecars (``.normmeta``) persist the fitted parameters of one or more
normalized columns as line-oriented text::

    normkit-meta v1
    [intscale]
    column=sensex
    rows=2
    index,sign,n_digits,leading
    0,1,4,1
    1,-1,3,9
"""

import csv
import io
import math
import re
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal, localcontext
from numbers import Integral, Real
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import (
    DECIMAL,
    DEFAULT_COLUMN_PREFIX,
    INTSCALE,
    METHODS,
    MINMAX,
    NUMBER_PATTERN,
    SIDECAR_MAGIC,
    SIDECAR_RECORD_HEADER,
    SIDECAR_VERSION,
    ZSCORE,
)
from .exceptions import (
    ColumnNotFoundError,
    CsvParseError,
    EmptyFileError,
    FormatError,
    InputNotFoundError,
    InputReadError,
    OutputError,
    RaggedRowsError,
    ValidationError,
    VersionError,
)
from .normcore import (
    DecimalScalingParams,
    IntegerScalingMetadata,
    IntegerScalingRecord,
    MinMaxParams,
    NormalizedColumn,
    NumericColumn,
    Params,
    ZScoreParams,
    method_of,
)
from .validation import InputValidator

PathLike = Union[str, Path]

_NUMBER = re.compile(NUMBER_PATTERN)
_MAGIC_LINE = re.compile(rf"{re.escape(SIDECAR_MAGIC)} v(\d+)")
_SECTION_LINE = re.compile(r"\[(\w+)\]")


# --- Number text -------------------------------------------------------------

def parse_number(text: str) -> Real:
    """
    Parse a decimal number; integers without a point or exponent stay ``int``.

    Raises:
        ValueError: If the text is not a finite decimal number
    """
    token = text.strip()
    if not _NUMBER.fullmatch(token):
        raise ValueError(f"'{text}' is not a decimal number")
    if any(marker in token for marker in ".eE"):
        value = float(token)
        if not math.isfinite(value):
            raise ValueError(f"'{text}' is out of range")
        return value
    return int(token)


def format_number(value: Real, decimals: Optional[int] = None) -> str:
    """
    Format a number for output, never in exponent notation.

    Integers are written as integers. Without ``decimals`` a float gets the
    shortest text that parses back to the same value; with ``decimals`` it
    is rounded half away from zero to exactly that many places.
    """
    if isinstance(value, Integral):
        return str(int(value))

    value = float(value)
    if decimals is None:
        return np.format_float_positional(value, unique=True, trim="0")

    with localcontext() as ctx:
        ctx.prec = 800
        rounded = Decimal(repr(value)).quantize(
            Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP
        )
    if rounded == 0:
        rounded = abs(rounded)  # no "-0.000"
    return f"{rounded:f}"


# --- Dataset -----------------------------------------------------------------

@dataclass(frozen=True)
class Dataset:
    """Named numeric columns of equal length, in file order."""

    columns: Tuple[NumericColumn, ...]

    def __post_init__(self):
        columns = tuple(self.columns)
        object.__setattr__(self, "columns", columns)

        names = [col.name for col in columns]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise ValidationError(f"duplicate column names: {', '.join(duplicates)}")

        if columns:
            length = len(columns[0])
            for col in columns[1:]:
                InputValidator.validate_length(length, len(col), f"column '{col.name}'")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(col.name for col in self.columns)

    @property
    def row_count(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    def column(self, selector: Union[str, int]) -> NumericColumn:
        """
        Look up a column by header name or zero-based index.

        A name match wins over an index, so a column named ``"0"`` is found
        by name.
        """
        for col in self.columns:
            if col.name == selector:
                return col

        text = str(selector).strip()
        if text.isdigit() and int(text) < len(self.columns):
            return self.columns[int(text)]

        raise ColumnNotFoundError(
            f"no column '{selector}'. Available columns: {', '.join(self.names)}",
            column=str(selector),
        )

    def select(self, selectors: Optional[Sequence[Union[str, int]]] = None) -> Tuple[NumericColumn, ...]:
        """Return the selected columns in the given order, or all of them."""
        if not selectors:
            return self.columns
        return tuple(self.column(selector) for selector in selectors)

    def with_columns(self, extra: Iterable[NumericColumn]) -> "Dataset":
        """Return a new dataset with ``extra`` appended."""
        return Dataset(self.columns + tuple(extra))


# --- CSV ---------------------------------------------------------------------

def _read_text(path: PathLike) -> str:
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8-sig")
    except FileNotFoundError:
        raise InputNotFoundError(f"file not found: {path}")
    except UnicodeDecodeError as e:
        raise InputReadError(f"{path} is not valid UTF-8: {e}")
    except OSError as e:
        raise InputReadError(f"cannot read {path}: {e}")


def parse_csv(text: str, has_header: bool = True, source: str = "<csv>") -> Dataset:
    """
    Parse CSV text into a Dataset. See :func:`read_csv`.

    Row numbers in errors count data rows from 1 (header excluded);
    column numbers count fields from 1.
    """
    names: Optional[List[str]] = None
    records: List[Tuple[int, List[str]]] = []

    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = next(csv.reader([line]))
        if has_header and names is None:
            names = [name.strip() for name in fields]
            for position, name in enumerate(names, start=1):
                if not name:
                    raise CsvParseError(
                        f"{source}: header column {position} (line {line_no}) has no name",
                        row=0, column=position,
                    )
            continue
        records.append((line_no, fields))

    if not records:
        detail = "has a header but no data rows" if names else "contains no data"
        raise EmptyFileError(f"{source} {detail}")

    width = len(names) if names is not None else len(records[0][1])
    rows = []
    for row, (line_no, fields) in enumerate(records, start=1):
        if len(fields) != width:
            raise RaggedRowsError(
                f"{source}: row {row} (line {line_no}) has {len(fields)} fields, expected {width}",
                row=row,
            )
        values = []
        for column, cell in enumerate(fields, start=1):
            try:
                values.append(parse_number(cell))
            except ValueError:
                raise CsvParseError(
                    f"{source}: row {row}, column {column} (line {line_no}): "
                    f"'{cell.strip()}' is not a decimal number",
                    row=row, column=column,
                )
        rows.append(values)

    if names is None:
        names = [f"{DEFAULT_COLUMN_PREFIX}{position}" for position in range(width)]

    return Dataset(
        NumericColumn(name, [values[position] for values in rows])
        for position, name in enumerate(names)
    )


def read_csv(path: PathLike, has_header: bool = True) -> Dataset:
    """
    Read a CSV file of numbers into a Dataset.

    Args:
        path: CSV file location
        has_header: Use the first row for column names; otherwise columns
            are named col0, col1, ...

    Raises:
        InputNotFoundError: If the file does not exist
        CsvParseError: If a cell is not a decimal number
        RaggedRowsError: If a row has the wrong number of fields
        EmptyFileError: If there are no data rows
    """
    return parse_csv(_read_text(path), has_header, source=str(path))


def render_csv(ds: Dataset, decimals: Optional[int] = None) -> str:
    """Render a Dataset as CSV text with a header row and ``\\n`` line endings."""
    if decimals is not None:
        decimals = InputValidator.validate_decimals(decimals)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ds.names)
    for row in zip(*(col.values for col in ds.columns)):
        writer.writerow([format_number(value, decimals) for value in row])
    return buffer.getvalue()


def write_csv(ds: Dataset, path: PathLike, decimals: Optional[int] = None) -> None:
    """
    Write a Dataset to a CSV file.

    Args:
        ds: Dataset to write
        path: Output file location
        decimals: Round floats to this many places; ``None`` writes the
            shortest text that reads back to the identical value

    Raises:
        OutputError: If the file cannot be written
    """
    text = render_csv(ds, decimals)
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}")


# --- Sidecars ----------------------------------------------------------------

@dataclass(frozen=True)
class ParamSidecar:
    """Fitted parameters of one normalized column, as persisted on disk."""

    method: str
    column: str
    params: Params
    rows: int
    version: int = field(default=SIDECAR_VERSION)

    def __post_init__(self):
        InputValidator.validate_method(self.method)
        if method_of(self.params) != self.method:
            raise FormatError(
                f"section [{self.method}] holds {method_of(self.params)} parameters"
            )
        if isinstance(self.params, IntegerScalingMetadata):
            InputValidator.validate_length(self.rows, len(self.params), "integer scaling records")

    @classmethod
    def from_normalized(cls, norm: NormalizedColumn) -> "ParamSidecar":
        return cls(norm.method, norm.name, norm.params, len(norm))


def _param_entries(params: Params) -> List[Tuple[str, Real]]:
    if isinstance(params, MinMaxParams):
        return [
            ("src_min", params.src_min),
            ("src_max", params.src_max),
            ("target_low", params.target_low),
            ("target_high", params.target_high),
        ]
    if isinstance(params, ZScoreParams):
        return [("mean", params.mean), ("std", params.std), ("n", params.n)]
    if isinstance(params, DecimalScalingParams):
        return [("j", params.j)]
    return []


def dump_sidecars(sidecars: Sequence[ParamSidecar]) -> str:
    """Render sidecars as text, one section per normalized column."""
    lines = [f"{SIDECAR_MAGIC} v{SIDECAR_VERSION}"]
    for position, sidecar in enumerate(sidecars):
        if sidecar.version != SIDECAR_VERSION:
            raise VersionError(f"cannot write sidecar version {sidecar.version}")
        if "\n" in sidecar.column or "\r" in sidecar.column:
            raise FormatError(f"column name {sidecar.column!r} contains a line break")
        if position:
            lines.append("")

        lines.append(f"[{sidecar.method}]")
        lines.append(f"column={sidecar.column}")
        lines.append(f"rows={sidecar.rows}")
        lines.extend(f"{key}={format_number(value)}" for key, value in _param_entries(sidecar.params))

        if isinstance(sidecar.params, IntegerScalingMetadata):
            lines.append(SIDECAR_RECORD_HEADER)
            lines.extend(
                f"{index},{sign},{n_digits},{leading}"
                for index, (sign, n_digits, leading) in enumerate(
                    zip(sidecar.params.signs, sidecar.params.n_digits, sidecar.params.leading)
                )
            )
    return "\n".join(lines) + "\n"


@dataclass
class _Section:
    method: str
    line_no: int
    entries: Dict[str, str] = field(default_factory=dict)
    records: List[Tuple[int, str]] = field(default_factory=list)


def parse_sidecars(text: str, source: str = "<sidecar>") -> List[ParamSidecar]:
    """
    Parse sidecar text.

    Raises:
        FormatError: If the text is not a well-formed sidecar
        VersionError: If the format version is not supported
    """
    lines = text.splitlines()
    magic = _MAGIC_LINE.fullmatch(lines[0].strip()) if lines else None
    if magic is None:
        raise FormatError(f"{source}: first line must be '{SIDECAR_MAGIC} v{SIDECAR_VERSION}'")
    if int(magic.group(1)) != SIDECAR_VERSION:
        raise VersionError(
            f"{source}: unsupported sidecar version {magic.group(1)} "
            f"(this version reads v{SIDECAR_VERSION})"
        )

    sections: List[_Section] = []
    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        header = _SECTION_LINE.fullmatch(line)
        if header:
            sections.append(_Section(header.group(1), line_no))
        elif not sections:
            raise FormatError(f"{source}: line {line_no} is outside any [method] section")
        elif line == SIDECAR_RECORD_HEADER:
            continue
        elif "=" in line:
            key, value = (part.strip() for part in line.split("=", 1))
            if key in sections[-1].entries:
                raise FormatError(f"{source}: line {line_no} repeats key '{key}'")
            sections[-1].entries[key] = value
        else:
            sections[-1].records.append((line_no, line))

    if not sections:
        raise FormatError(f"{source}: no [method] section")
    return [_build_sidecar(section, source) for section in sections]


def _build_sidecar(section: _Section, source: str) -> ParamSidecar:
    where = f"{source}: section [{section.method}] at line {section.line_no}"
    if section.method not in METHODS:
        raise FormatError(f"{where}: unknown method")

    expected = {"column", "rows"}
    expected.update(key for key, _ in _param_entries(_TEMPLATES[section.method]))
    missing = sorted(expected - section.entries.keys())
    unknown = sorted(section.entries.keys() - expected)
    if missing:
        raise FormatError(f"{where}: missing {', '.join(missing)}")
    if unknown:
        raise FormatError(f"{where}: unknown keys {', '.join(unknown)}")
    if section.records and section.method != INTSCALE:
        raise FormatError(f"{where}: unexpected record line {section.records[0][0]}")

    entries = section.entries
    try:
        rows = _parse_int(entries["rows"])
        if section.method == MINMAX:
            params: Params = MinMaxParams(
                parse_number(entries["src_min"]),
                parse_number(entries["src_max"]),
                parse_number(entries["target_low"]),
                parse_number(entries["target_high"]),
            )
        elif section.method == ZSCORE:
            params = ZScoreParams(
                parse_number(entries["mean"]),
                parse_number(entries["std"]),
                _parse_int(entries["n"]),
            )
        elif section.method == DECIMAL:
            params = DecimalScalingParams(_parse_int(entries["j"]))
        else:
            params = IntegerScalingMetadata.from_records(_parse_records(section.records, where))
        return ParamSidecar(section.method, entries["column"], params, rows)
    except (ValueError, ValidationError) as e:
        raise FormatError(f"{where}: {e}") from e


def _parse_int(text: str) -> int:
    value = parse_number(text)
    if not isinstance(value, int):
        raise ValueError(f"'{text}' is not an integer")
    return value


def _parse_records(records: Sequence[Tuple[int, str]], where: str) -> List[IntegerScalingRecord]:
    parsed = []
    for position, (line_no, line) in enumerate(records):
        fields = line.split(",")
        if len(fields) != 4:
            raise ValueError(f"line {line_no}: expected index,sign,n_digits,leading")
        index, sign, n_digits, leading = (_parse_int(item) for item in fields)
        if index != position:
            raise ValueError(f"line {line_no}: record index {index}, expected {position}")
        parsed.append(IntegerScalingRecord(sign, n_digits, leading))
    return parsed


# Parameter instances used only to list the keys each method stores
_TEMPLATES: Dict[str, Params] = {
    MINMAX: MinMaxParams(0, 1),
    ZSCORE: ZScoreParams(0.0, 1.0, 1),
    DECIMAL: DecimalScalingParams(0),
    INTSCALE: IntegerScalingMetadata((), (), ()),
}


def save_sidecars(sidecars: Sequence[ParamSidecar], path: PathLike) -> None:
    """
    Write one or more sidecar sections to a file.

    Raises:
        OutputError: If the file cannot be written
    """
    text = dump_sidecars(sidecars)
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}")


def save_sidecar(sc: ParamSidecar, path: PathLike) -> None:
    """Write a single-section sidecar file."""
    save_sidecars([sc], path)


def load_sidecars(path: PathLike) -> List[ParamSidecar]:
    """
    Read every section of a sidecar file.

    Raises:
        InputNotFoundError, InputReadError, FormatError, VersionError
    """
    return parse_sidecars(_read_text(path), source=str(path))


def load_sidecar(path: PathLike) -> ParamSidecar:
    """
    Read a sidecar file holding exactly one section.

    Raises:
        FormatError: If the file holds more than one section
    """
    sidecars = load_sidecars(path)
    if len(sidecars) != 1:
        raise FormatError(f"{path}: expected one section, found {len(sidecars)}")
    return sidecars[0]
