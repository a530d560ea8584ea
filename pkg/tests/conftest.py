"""Shared fixtures: the three published data sets and CSV helpers."""

from pathlib import Path
from typing import Callable, List, NamedTuple

import pytest


class PublishedTable(NamedTuple):
    name: str
    original: List[int]
    minmax: List[float]
    intscale: List[float]


BSE_SENSEX = PublishedTable(
    "sensex",
    [1229, 1264, 1397, 1455, 1483, 1523, 1548, 1594, 1670, 1680],
    [0.0976, 0.129, 0.25, 0.303, 0.3284, 0.385, 0.388, 0.429, 0.498, 0.5076],
    [0.229, 0.264, 0.397, 0.455, 0.483, 0.523, 0.548, 0.594, 0.670, 0.680],
)

NNGC = PublishedTable(
    "nngc",
    [2677, 3083, 3539, 4032, 4452, 5100, 5944, 6913, 6936, 9185],
    [0, 0.062, 0.132, 0.208, 0.273, 0.372, 0.502, 0.651, 0.654, 1],
    [0.677, 0.083, 0.539, 0.032, 0.452, 0.100, 0.944, 0.913, 0.936, 0.185],
)

ENROLLMENT = PublishedTable(
    "enroll",
    [1645, 2300, 2472, 1105, 7946, 1657, 9742, 4112, 917, 7219],
    [0.082, 0.157, 0.176, 0.021, 0.796, 0.084, 1, 0.362, 0, 0.714],
    [0.645, 0.300, 0.472, 0.105, 0.946, 0.657, 0.742, 0.112, 0.17, 0.219],
)


@pytest.fixture
def table_i() -> PublishedTable:
    return BSE_SENSEX


@pytest.fixture
def table_ii() -> PublishedTable:
    return NNGC


@pytest.fixture
def table_iii() -> PublishedTable:
    return ENROLLMENT


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write text to a file under tmp_path and return its path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def table_csv(write_file) -> Callable[[PublishedTable], Path]:
    """Write a published table's originals as a one-column CSV with a header."""

    def _table_csv(table: PublishedTable) -> Path:
        body = "\n".join(str(value) for value in table.original)
        return write_file(f"{table.name}.csv", f"{table.name}\n{body}\n")

    return _table_csv
