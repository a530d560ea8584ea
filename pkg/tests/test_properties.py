"""
Property suites over random columns.

Every suite is seeded so failures reproduce. Oracles are written out
independently of the implementation: two-pass mean/std, exact decimal
exponent search, direct Min-Max formula evaluation.
"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from normkit.normcore import (
    NumericColumn,
    decimal_scaling_normalize,
    integer_scaling_denormalize,
    integer_scaling_normalize,
    min_max_denormalize,
    min_max_normalize,
    z_score_normalize,
)


def random_integers(rng: np.random.Generator, size: int) -> list:
    """Integers of 1 to 12 digits (about 1% exactly 10^12), either sign."""
    digits = rng.integers(1, 13, size)
    low = np.where(digits == 1, 0, 10 ** (digits - 1))
    magnitude = rng.integers(low, 10 ** digits)
    magnitude = np.where(rng.random(size) < 0.01, 10 ** 12, magnitude)
    return np.where(rng.random(size) < 0.5, -magnitude, magnitude).tolist()


@pytest.fixture(scope="module")
def integer_columns():
    rng = np.random.default_rng(20150101)
    return [
        NumericColumn(f"c{index}", random_integers(rng, int(rng.integers(1, 101))))
        for index in range(10_000)
    ]


@pytest.fixture(scope="module")
def integer_scaled(integer_columns):
    return [(col, *integer_scaling_normalize(col)) for col in integer_columns]


@pytest.fixture(scope="module")
def real_columns():
    rng = np.random.default_rng(1229)
    columns = []
    for index in range(1_000):
        length = int(rng.integers(1, 1_001))
        scale = 10.0 ** int(rng.integers(-3, 7))
        columns.append(NumericColumn(f"r{index}", rng.uniform(-scale, scale, length).tolist()))
    return columns


# --- Integer Scaling -----------------------------------------------------------

def test_integer_scaling_round_trip_is_exact(integer_scaled):
    for col, norm, meta in integer_scaled:
        assert integer_scaling_denormalize(norm, meta).values == col.values


def test_integer_scaling_range(integer_scaled):
    originals = np.concatenate([np.asarray(col.values) for col, _, _ in integer_scaled])
    scaled = np.concatenate([np.asarray(norm.values) for _, norm, _ in integer_scaled])
    assert np.all((scaled >= 0) & (scaled < 1))
    assert np.all(scaled[np.abs(originals) <= 9] == 0)


def test_integer_scaling_range_exhaustive_to_one_million():
    norm, meta = integer_scaling_normalize(NumericColumn("x", range(10 ** 6 + 1)))
    scaled = np.asarray(norm.values)
    assert np.all((scaled >= 0) & (scaled < 1))
    assert integer_scaling_denormalize(norm, meta).values == tuple(range(10 ** 6 + 1))


def test_integer_scaling_is_element_local():
    rng = np.random.default_rng(42)
    values = random_integers(rng, 200)
    order = rng.permutation(len(values)).tolist()

    norm, meta = integer_scaling_normalize(NumericColumn("x", values))
    shuffled_norm, shuffled_meta = integer_scaling_normalize(
        NumericColumn("x", [values[i] for i in order])
    )
    assert shuffled_norm.values == tuple(norm.values[i] for i in order)
    assert shuffled_meta.records == tuple(meta.records[i] for i in order)

    for position in range(0, len(values), 17):
        single, _ = integer_scaling_normalize(NumericColumn("x", [values[position]]))
        assert single.values[0] == norm.values[position]


# --- Oracles -------------------------------------------------------------------

def two_pass_z_scores(values):
    n = len(values)
    mean = sum(values) / n
    if n == 1:
        return [0.0]
    std = math.sqrt(sum((v - mean) ** 2 for v in values) / (n - 1))
    return [(v - mean) / std for v in values]


def exact_decimal_exponent(values):
    peak = Fraction(max(abs(v) for v in values))
    j = 0
    while peak / 10 ** j >= 1:
        j += 1
    return j


def test_z_score_matches_two_pass_oracle(real_columns):
    for col in real_columns:
        norm, _ = z_score_normalize(col)
        np.testing.assert_allclose(norm.values, two_pass_z_scores(col.values), rtol=1e-12, atol=1e-12)


def test_z_score_output_moments(real_columns):
    for col in real_columns:
        if len(col) < 2:
            continue
        norm, _ = z_score_normalize(col)
        assert abs(float(np.mean(norm.values))) < 1e-9
        assert abs(float(np.std(norm.values, ddof=1)) - 1) < 1e-9


def test_decimal_scaling_exponent_is_minimal(real_columns):
    for col in real_columns:
        norm, params = decimal_scaling_normalize(col)
        assert params.j == exact_decimal_exponent(col.values)
        assert max(abs(v) for v in norm.values) < 1
        if params.j > 0:
            assert max(abs(v) for v in col.values) / 10.0 ** (params.j - 1) >= 1


def test_decimal_scaling_preserves_sign_and_order(real_columns):
    for col in real_columns[:100]:
        norm, _ = decimal_scaling_normalize(col)
        assert np.array_equal(np.sign(norm.values), np.sign(col.values))
        order = sorted(range(len(col)), key=col.values.__getitem__)
        scaled = [norm.values[i] for i in order]
        assert all(a <= b for a, b in zip(scaled, scaled[1:]))


def test_min_max_matches_direct_formula(real_columns):
    rng = random.Random(3)
    for col in real_columns:
        low = rng.uniform(-10, 10)
        high = low + rng.uniform(0.1, 10)
        norm, params = min_max_normalize(col, low, high)

        lo, hi = min(col.values), max(col.values)
        if lo == hi:
            expected = [low] * len(col)
        else:
            expected = [(v - lo) / (hi - lo) * (high - low) + low for v in col.values]
        np.testing.assert_allclose(norm.values, expected, rtol=1e-12, atol=1e-12)

        assert norm.values[col.values.index(lo)] == low
        assert norm.values[col.values.index(hi)] == (low if lo == hi else high)
        scaled = np.asarray(norm.values)
        assert np.all((scaled >= low - 1e-12) & (scaled <= high + 1e-12))


def test_min_max_preserves_order(real_columns):
    for col in real_columns[:200]:
        norm, _ = min_max_normalize(col)
        order = sorted(range(len(col)), key=col.values.__getitem__)
        scaled = [norm.values[i] for i in order]
        assert all(a <= b for a, b in zip(scaled, scaled[1:]))
        assert int(np.argmax(norm.values)) == int(np.argmax(col.values))
        assert int(np.argmin(norm.values)) == int(np.argmin(col.values))


def test_min_max_round_trip(real_columns):
    for col in real_columns:
        if min(col.values) == max(col.values):
            continue
        norm, params = min_max_normalize(col, -1, 1)
        restored = min_max_denormalize(norm, params)
        scale = max(abs(v) for v in col.values)
        np.testing.assert_allclose(restored.values, col.values, rtol=1e-9, atol=1e-9 * scale)


# --- Degenerate columns --------------------------------------------------------

@pytest.mark.parametrize("value", [7, -3.25, 0.1, 1e9])
def test_identical_values_degenerate_cases(value):
    col = NumericColumn("x", [value] * 5)
    assert z_score_normalize(col)[0].values == (0.0,) * 5
    assert min_max_normalize(col, 2, 3)[0].values == (2.0,) * 5


def test_all_zero_column_needs_no_decimal_scaling():
    norm, params = decimal_scaling_normalize(NumericColumn("x", [0, 0, 0, 0.0]))
    assert params.j == 0
    assert norm.values == (0, 0, 0, 0)
