"""
Side-by-side comparison of normalization methods.

Builds comparison tables (row number, original value, one column per
method) and renders them as Markdown, as a Dataset for CSV output, or as
a static SVG line chart.
"""

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from numbers import Real
from typing import List, Optional, Sequence, Tuple, Union

from . import normcore
from .config import (
    CHART_AUTO_MARGIN,
    CHART_HEIGHT,
    CHART_MARGIN_BOTTOM,
    CHART_MARGIN_LEFT,
    CHART_MARGIN_RIGHT,
    CHART_MARGIN_TOP,
    CHART_PALETTE,
    CHART_WIDTH,
    CHART_Y_TICKS,
    DEFAULT_DECIMALS,
    DEFAULT_TARGET_HIGH,
    DEFAULT_TARGET_LOW,
    INTSCALE,
    METHOD_LABELS,
    METHOD_SHORT_NAMES,
    MINMAX,
)
from .dataio import Dataset, format_number
from .exceptions import NormkitError, ValidationError
from .normcore import NumericColumn
from .validation import InputValidator

SVG_NAMESPACE = "http://www.w3.org/2000/svg"

# Header cells of the two leading table columns
ROW_NUMBER_HEADING = "Sl. No."
ORIGINAL_HEADING = "Original Data"


@dataclass(frozen=True)
class MethodColumn:
    """Normalized values of one method, tagged with the method name."""

    method: str
    values: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))


@dataclass(frozen=True)
class ComparisonTable:
    """Original values and their normalized counterparts, row by row."""

    name: str
    original: Tuple[Real, ...]
    columns: Tuple[MethodColumn, ...] = ()
    boundary: Tuple[Real, Real] = (DEFAULT_TARGET_LOW, DEFAULT_TARGET_HIGH)

    def __post_init__(self):
        object.__setattr__(self, "original", tuple(self.original))
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "boundary", tuple(self.boundary))
        for column in self.columns:
            InputValidator.validate_length(
                len(self.original), len(column.values), f"{column.method} column"
            )

    @property
    def row_count(self) -> int:
        return len(self.original)

    @property
    def methods(self) -> Tuple[str, ...]:
        return tuple(column.method for column in self.columns)


def compare(
    col: NumericColumn,
    methods: Union[str, Sequence[str]],
    boundary: Optional[Tuple[Real, Real]] = None,
) -> ComparisonTable:
    """
    Normalize one column with each requested method.

    Args:
        col: Column to normalize
        methods: Method tags, as a sequence or comma-separated text
        boundary: Min-Max target [C, D]; defaults to [0, 1]

    Returns:
        A table whose method columns appear in the requested order

    Raises:
        NormkitError: The first normcore error, with ``method`` set to the
            method that raised it
    """
    methods = InputValidator.validate_methods(methods)
    low, high = boundary if boundary is not None else (DEFAULT_TARGET_LOW, DEFAULT_TARGET_HIGH)

    columns = []
    for method in methods:
        try:
            norm, _ = normcore.normalize(col, method, low, high)
        except NormkitError as e:
            e.method = method
            raise
        columns.append(MethodColumn(method, norm.values))

    return ComparisonTable(col.name, col.values, tuple(columns), (low, high))


def render_markdown(t: ComparisonTable, decimals: int = DEFAULT_DECIMALS) -> str:
    """
    Render a comparison table as a pipe-delimited Markdown table.

    Original values are written as read; normalized values are rounded
    half away from zero to ``decimals`` places. A table without method
    columns renders as its header only.
    """
    decimals = InputValidator.validate_decimals(decimals)
    headings = [ROW_NUMBER_HEADING, ORIGINAL_HEADING]
    headings.extend(METHOD_LABELS[method] for method in t.methods)

    lines = [_markdown_row(headings), _markdown_row(["---:"] * len(headings))]
    if not t.columns:
        return "\n".join(lines) + "\n"

    for position, original in enumerate(t.original):
        cells = [str(position + 1), format_number(original)]
        cells.extend(format_number(column.values[position], decimals) for column in t.columns)
        lines.append(_markdown_row(cells))
    return "\n".join(lines) + "\n"


def _markdown_row(cells: Sequence[str]) -> str:
    return "| " + " | ".join(cells) + " |"


def table_to_dataset(t: ComparisonTable) -> Dataset:
    """Convert a comparison table to a Dataset for CSV output."""
    columns = [
        NumericColumn("sl_no", range(1, t.row_count + 1)),
        NumericColumn(t.name or "original", t.original),
    ]
    columns.extend(NumericColumn(column.method, column.values) for column in t.columns)
    return Dataset(columns)


# --- SVG chart ---------------------------------------------------------------

def _bounded_to_unit(method: str, boundary: Tuple[Real, Real]) -> bool:
    if method == INTSCALE:
        return True
    return method == MINMAX and tuple(boundary) == (0, 1)


def _y_range(t: ComparisonTable) -> Tuple[float, float]:
    if all(_bounded_to_unit(method, t.boundary) for method in t.methods):
        return 0.0, 1.0

    values = [value for column in t.columns for value in column.values]
    low, high = min(values), max(values)

    span = high - low
    margin = span * CHART_AUTO_MARGIN if span else (abs(high) * CHART_AUTO_MARGIN or 1.0)
    return low - margin, high + margin


def _coord(value: float) -> str:
    return f"{value:.2f}"


def render_svg_chart(t: ComparisonTable, title: str = "") -> str:
    """
    Render a comparison table as an SVG 1.1 line chart.

    Each method is one polyline over the row number. The y axis is fixed
    to [0, 1] when every method bounds its output there (Integer Scaling,
    Min-Max onto [0, 1]); otherwise it spans the data with a 5% margin. A single-row table gets point markers instead of lines.

    Raises:
        ValidationError: If the table has no method columns
    """
    if not t.columns:
        raise ValidationError("a chart needs at least one method column")

    left, right = CHART_MARGIN_LEFT, CHART_WIDTH - CHART_MARGIN_RIGHT
    top, bottom = CHART_MARGIN_TOP, CHART_HEIGHT - CHART_MARGIN_BOTTOM
    y_low, y_high = _y_range(t)

    def x_of(position: int) -> float:
        if t.row_count == 1:
            return (left + right) / 2
        return left + position * (right - left) / (t.row_count - 1)

    def y_of(value: float) -> float:
        return bottom - (value - y_low) / (y_high - y_low) * (bottom - top)

    svg = ET.Element("svg", {
        "xmlns": SVG_NAMESPACE,
        "version": "1.1",
        "width": str(CHART_WIDTH),
        "height": str(CHART_HEIGHT),
        "viewBox": f"0 0 {CHART_WIDTH} {CHART_HEIGHT}",
        "font-family": "sans-serif",
        "font-size": "12",
    })
    ET.SubElement(svg, "title").text = title
    ET.SubElement(svg, "rect", {
        "x": "0", "y": "0", "width": str(CHART_WIDTH), "height": str(CHART_HEIGHT), "fill": "white",
    })
    if title:
        heading = ET.SubElement(svg, "text", {
            "x": _coord(CHART_WIDTH / 2), "y": _coord(top / 2),
            "text-anchor": "middle", "font-size": "14",
        })
        heading.text = title

    _draw_axes(svg, t.row_count, x_of, y_of, y_low, y_high, (left, right, top, bottom))

    for index, column in enumerate(t.columns):
        colour = CHART_PALETTE[index % len(CHART_PALETTE)]
        points = [(x_of(position), y_of(value)) for position, value in enumerate(column.values)]
        if len(points) > 1:
            ET.SubElement(svg, "polyline", {
                "class": f"series {column.method}",
                "points": " ".join(f"{_coord(x)},{_coord(y)}" for x, y in points),
                "fill": "none",
                "stroke": colour,
                "stroke-width": "2",
            })
        else:
            for x, y in points:
                ET.SubElement(svg, "circle", {
                    "class": f"series {column.method}",
                    "cx": _coord(x), "cy": _coord(y), "r": "4", "fill": colour,
                })

    _draw_legend(svg, t.methods, left, CHART_HEIGHT - 16)

    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"


def _draw_axes(svg, row_count, x_of, y_of, y_low, y_high, box) -> None:
    left, right, top, bottom = box
    axes = ET.SubElement(svg, "g", {"class": "axes", "stroke": "#333333", "stroke-width": "1"})
    ET.SubElement(axes, "line", {
        "x1": _coord(left), "y1": _coord(bottom), "x2": _coord(right), "y2": _coord(bottom),
    })
    ET.SubElement(axes, "line", {
        "x1": _coord(left), "y1": _coord(top), "x2": _coord(left), "y2": _coord(bottom),
    })

    labels = ET.SubElement(svg, "g", {"class": "tick-labels", "fill": "#333333"})
    for step in range(CHART_Y_TICKS):
        value = y_low + step * (y_high - y_low) / (CHART_Y_TICKS - 1)
        y = _coord(y_of(value))
        ET.SubElement(axes, "line", {
            "x1": _coord(left), "y1": y, "x2": _coord(right), "y2": y,
            "stroke": "#dddddd",
        })
        label = ET.SubElement(labels, "text", {
            "x": _coord(left - 6), "y": y, "text-anchor": "end", "dominant-baseline": "middle",
        })
        label.text = format_number(value, 2)

    # Label at most about ten row numbers
    stride = max(1, -(-row_count // 10))
    for position in range(0, row_count, stride):
        label = ET.SubElement(labels, "text", {
            "x": _coord(x_of(position)), "y": _coord(bottom + 16), "text-anchor": "middle",
        })
        label.text = str(position + 1)

    x_title = ET.SubElement(labels, "text", {
        "x": _coord((left + right) / 2), "y": _coord(bottom + 34), "text-anchor": "middle",
    })
    x_title.text = ROW_NUMBER_HEADING
    y_title = ET.SubElement(labels, "text", {
        "x": _coord(16), "y": _coord((top + bottom) / 2), "text-anchor": "middle",
        "transform": f"rotate(-90 16 {_coord((top + bottom) / 2)})",
    })
    y_title.text = "Normalized value"


def _draw_legend(svg, methods: Sequence[str], x: float, y: float) -> None:
    legend = ET.SubElement(svg, "g", {"class": "legend"})
    offset = 0.0
    for index, method in enumerate(methods):
        colour = CHART_PALETTE[index % len(CHART_PALETTE)]
        ET.SubElement(legend, "line", {
            "x1": _coord(x + offset), "y1": _coord(y - 4),
            "x2": _coord(x + offset + 20), "y2": _coord(y - 4),
            "stroke": colour, "stroke-width": "2",
        })
        label = ET.SubElement(legend, "text", {"x": _coord(x + offset + 26), "y": _coord(y)})
        label.text = METHOD_SHORT_NAMES[method]
        offset += 40 + 7 * len(METHOD_SHORT_NAMES[method])


def default_title(t: ComparisonTable) -> str:
    """Chart title naming the compared methods and the column."""
    names: List[str] = [METHOD_SHORT_NAMES[method] for method in t.methods]
    subject = f" on {t.name}" if t.name else ""
    return f"Comparison of {' vs '.join(names)}{subject}"
