"""Tests for comparison tables, Markdown rendering and SVG charts."""

import xml.etree.ElementTree as ET

import pytest

from normkit.exceptions import InvalidBoundaryError, NonIntegerValueError, UnknownMethodError, ValidationError
from normkit.normcore import NumericColumn
from normkit.report import (
    ComparisonTable,
    MethodColumn,
    compare,
    default_title,
    render_markdown,
    render_svg_chart,
    table_to_dataset,
)

SVG = "{http://www.w3.org/2000/svg}"


def points_of(polyline):
    return [tuple(map(float, pair.split(","))) for pair in polyline.get("points").split()]


def y_tick_labels(svg_text):
    group = ET.fromstring(svg_text).find(f"{SVG}g[@class='tick-labels']")
    return [label.text for label in group.findall(f"{SVG}text")][:5]


class TestCompare:
    def test_columns_follow_requested_order(self, table_iii):
        col = NumericColumn("enroll", table_iii.original)
        table = compare(col, ["intscale", "minmax"])
        assert table.methods == ("intscale", "minmax")
        assert table.original == tuple(table_iii.original)
        assert table.row_count == 10

        intscale, minmax = table.columns
        assert intscale.values[8] == pytest.approx(0.17)
        assert minmax.values[8] == 0
        assert minmax.values[6] == 1

    def test_comma_separated_methods(self, table_ii):
        table = compare(NumericColumn("nngc", table_ii.original), "minmax,zscore,decimal,intscale")
        assert table.methods == ("minmax", "zscore", "decimal", "intscale")

    def test_boundary_applies_to_min_max(self, table_ii):
        table = compare(NumericColumn("nngc", table_ii.original), ["minmax"], boundary=(-1, 1))
        assert min(table.columns[0].values) == -1
        assert max(table.columns[0].values) == 1

    def test_empty_boundary_names_the_method(self, table_ii):
        with pytest.raises(InvalidBoundaryError) as exc:
            compare(NumericColumn("nngc", table_ii.original), ["zscore", "minmax"], boundary=(0, 0))
        assert exc.value.method == "minmax"

    def test_integer_scaling_of_reals_names_the_method(self):
        with pytest.raises(NonIntegerValueError) as exc:
            compare(NumericColumn("x", [1.5, 2]), ["decimal", "intscale"])
        assert exc.value.method == "intscale"
        assert exc.value.row == 1

    @pytest.mark.parametrize("methods", [[], "", ["minmax", "minmax"]])
    def test_bad_method_lists(self, methods):
        with pytest.raises(ValidationError):
            compare(NumericColumn("x", [1, 2]), methods)

    def test_unknown_method(self):
        with pytest.raises(UnknownMethodError):
            compare(NumericColumn("x", [1, 2]), ["minmax", "softmax"])

    def test_column_lengths_must_match(self):
        with pytest.raises(ValidationError):
            ComparisonTable("x", [1, 2], [MethodColumn("minmax", [0.0])])


class TestMarkdown:
    def test_enrollment_table(self, table_iii):
        table = compare(NumericColumn("enroll", table_iii.original), ["minmax", "intscale"])
        text = render_markdown(table, decimals=3)
        lines = text.splitlines()

        assert lines[0] == (
            "| Sl. No. | Original Data | Min-Max Normalization | Integer Scaling Normalization |"
        )
        assert lines[1] == "| ---: | ---: | ---: | ---: |"
        assert lines[2] == "| 1 | 1645 | 0.082 | 0.645 |"
        assert "| 9 | 917 | 0.000 | 0.170 |" in lines
        assert len(lines) == 12
        assert text.endswith("\n")

    def test_no_method_columns_renders_header_only(self):
        text = render_markdown(ComparisonTable("x", [1, 2]))
        assert text == "| Sl. No. | Original Data |\n| ---: | ---: |\n"

    def test_originals_are_not_rounded(self):
        table = compare(NumericColumn("x", [0.12345, 2]), ["decimal"])
        assert "| 1 | 0.12345 | 0.012 |" in render_markdown(table)

    def test_decimals_are_validated(self):
        with pytest.raises(ValidationError):
            render_markdown(ComparisonTable("x", [1]), decimals=18)

    def test_rendering_is_deterministic(self, table_ii):
        col = NumericColumn("nngc", table_ii.original)
        methods = ["minmax", "zscore", "decimal", "intscale"]
        assert render_markdown(compare(col, methods)) == render_markdown(compare(col, methods))


def test_table_to_dataset(table_ii):
    table = compare(NumericColumn("nngc", table_ii.original), ["minmax", "intscale"])
    ds = table_to_dataset(table)
    assert ds.names == ("sl_no", "nngc", "minmax", "intscale")
    assert ds.column("sl_no").values == tuple(range(1, 11))
    assert ds.column("intscale").values[0] == pytest.approx(0.677)


class TestSvgChart:
    def test_one_polyline_per_method(self, table_iii):
        table = compare(NumericColumn("enroll", table_iii.original), ["minmax", "intscale"])
        root = ET.fromstring(render_svg_chart(table, "Enrollment"))

        assert root.tag == f"{SVG}svg"
        assert root.get("width") == "640"
        polylines = root.findall(f"{SVG}polyline")
        assert [line.get("class") for line in polylines] == ["series minmax", "series intscale"]
        for line in polylines:
            assert len(points_of(line)) == 10
        assert root.find(f"{SVG}title").text == "Enrollment"

    def test_unit_interval_values_use_fixed_axis(self, table_iii):
        table = compare(NumericColumn("enroll", table_iii.original), ["minmax"])
        root = ET.fromstring(render_svg_chart(table))
        ys = [y for _, y in points_of(root.find(f"{SVG}polyline"))]
        # value 0 sits on the x axis, value 1 on the top margin
        assert max(ys) == pytest.approx(480 - 72)
        assert min(ys) == pytest.approx(48)

    def test_bounded_methods_use_fixed_axis(self, table_ii):
        table = compare(NumericColumn("nngc", table_ii.original), ["minmax", "intscale"])
        assert y_tick_labels(render_svg_chart(table)) == ["0.00", "0.25", "0.50", "0.75", "1.00"]

    def test_decimal_scaling_gets_an_auto_axis_even_inside_unit_interval(self, table_ii):
        table = compare(NumericColumn("nngc", table_ii.original), ["decimal"])
        labels = y_tick_labels(render_svg_chart(table))
        # 0.2677 .. 0.9185 plus a 5% margin
        assert labels[0] == "0.24"
        assert labels[-1] == "0.95"

    def test_min_max_onto_other_boundary_gets_an_auto_axis(self, table_ii):
        table = compare(NumericColumn("nngc", table_ii.original), ["minmax", "intscale"], (-1, 1))
        assert table.boundary == (-1, 1)
        labels = y_tick_labels(render_svg_chart(table))
        assert labels[0] == "-1.10"
        assert labels[-1] == "1.10"

    def test_points_stay_inside_plot_area(self, table_ii):
        table = compare(NumericColumn("nngc", table_ii.original), ["zscore", "decimal"])
        root = ET.fromstring(render_svg_chart(table))
        for line in root.findall(f"{SVG}polyline"):
            for x, y in points_of(line):
                assert 64 <= x <= 640 - 24
                assert 48 <= y <= 480 - 72

    def test_single_row_draws_markers(self):
        table = compare(NumericColumn("x", [42]), ["minmax", "zscore"])
        root = ET.fromstring(render_svg_chart(table))
        assert root.findall(f"{SVG}polyline") == []
        assert len(root.findall(f"{SVG}circle")) == 2

    def test_needs_a_method_column(self):
        with pytest.raises(ValidationError):
            render_svg_chart(ComparisonTable("x", [1, 2]))

    def test_rendering_is_deterministic(self, table_i):
        table = compare(NumericColumn("sensex", table_i.original), ["minmax", "intscale"])
        assert render_svg_chart(table, "t") == render_svg_chart(table, "t")


def test_default_title():
    table = compare(NumericColumn("enroll", [1, 2]), ["minmax", "intscale"])
    assert default_title(table) == "Comparison of Min-Max vs Integer Scaling on enroll"
