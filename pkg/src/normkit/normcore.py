"""
Normalization transforms for normkit.

Implements Min-Max, Z-score, Decimal Scaling and Integer Scaling together
with the parameter objects that make each transform exactly invertible.
Every function here is pure: inputs are never mutated and parameter
objects are immutable.
"""

import math
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from .config import (
    DECIMAL,
    DEFAULT_TARGET_HIGH,
    DEFAULT_TARGET_LOW,
    INTSCALE,
    MAX_INTSCALE_DIGITS,
    MINMAX,
    ZSCORE,
)
from .digits import digit_count, leading_digit
from .exceptions import (
    DegenerateParamsError,
    EmptyColumnError,
    InvalidParamsError,
    MethodMismatchError,
    OutOfRangeError,
)
from .validation import InputValidator

# 10.0 ** 309 overflows a double
MAX_DECIMAL_EXPONENT = 308

# Place values 10^0 .. 10^(MAX_INTSCALE_DIGITS - 1)
_PLACES = 10 ** np.arange(MAX_INTSCALE_DIGITS, dtype=np.int64)
_INTSCALE_LIMIT = 10 ** MAX_INTSCALE_DIGITS

__all__ = [
    "NumericColumn",
    "NormalizedColumn",
    "MinMaxParams",
    "ZScoreParams",
    "DecimalScalingParams",
    "IntegerScalingRecord",
    "IntegerScalingMetadata",
    "Params",
    "digit_count",
    "leading_digit",
    "fit_min_max",
    "apply_min_max",
    "min_max_normalize",
    "min_max_denormalize",
    "fit_z_score",
    "apply_z_score",
    "z_score_normalize",
    "z_score_denormalize",
    "z_score_normalize_rows",
    "z_score_denormalize_rows",
    "fit_decimal_scaling",
    "apply_decimal_scaling",
    "decimal_scaling_normalize",
    "decimal_scaling_denormalize",
    "integer_scaling_normalize",
    "integer_scaling_denormalize",
    "method_of",
    "normalize",
    "denormalize",
]


@dataclass(frozen=True)
class NumericColumn:
    """A named, ordered series of numbers; the unit of normalization."""

    name: str
    values: Tuple[Real, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class MinMaxParams:
    """Source range and target boundary [C, D] of a Min-Max transform."""

    src_min: Real
    src_max: Real
    target_low: Real = DEFAULT_TARGET_LOW
    target_high: Real = DEFAULT_TARGET_HIGH

    def __post_init__(self):
        InputValidator.validate_boundary(self.target_low, self.target_high)
        for value in (self.src_min, self.src_max):
            if not math.isfinite(value):
                raise InvalidParamsError(f"source bound {value!r} is not finite")
        if self.src_min > self.src_max:
            raise InvalidParamsError(
                f"source minimum {self.src_min} exceeds source maximum {self.src_max}"
            )

    @property
    def is_degenerate(self) -> bool:
        return self.src_min == self.src_max


@dataclass(frozen=True)
class ZScoreParams:
    """Mean and sample standard deviation (n - 1 divisor) of the source column."""

    mean: float
    std: float
    n: int

    def __post_init__(self):
        if not math.isfinite(self.mean):
            raise InvalidParamsError(f"mean {self.mean!r} is not finite")
        if not math.isfinite(self.std) or self.std < 0:
            raise InvalidParamsError(f"standard deviation {self.std!r} must be finite and >= 0")
        if isinstance(self.n, bool) or not isinstance(self.n, Integral) or self.n < 1:
            raise InvalidParamsError(f"element count {self.n!r} must be a positive integer")


@dataclass(frozen=True)
class DecimalScalingParams:
    """The exponent j of a Decimal Scaling transform."""

    j: int

    def __post_init__(self):
        if (
            isinstance(self.j, bool)
            or not isinstance(self.j, Integral)
            or not 0 <= self.j <= MAX_DECIMAL_EXPONENT
        ):
            raise InvalidParamsError(
                f"exponent j={self.j!r} must be an integer in 0..{MAX_DECIMAL_EXPONENT}"
            )


@dataclass(frozen=True)
class IntegerScalingRecord:
    """Sign, digit count N and leading digit A of one integer element."""

    __slots__ = ("sign", "n_digits", "leading")

    sign: int
    n_digits: int
    leading: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise InvalidParamsError(f"sign must be -1 or +1, got {self.sign!r}")
        if not 1 <= self.n_digits <= MAX_INTSCALE_DIGITS:
            raise InvalidParamsError(
                f"digit count must be 1..{MAX_INTSCALE_DIGITS}, got {self.n_digits!r}"
            )
        if not 0 <= self.leading <= 9:
            raise InvalidParamsError(f"leading digit must be 0..9, got {self.leading!r}")
        if self.leading == 0 and self.n_digits != 1:
            raise InvalidParamsError("leading digit 0 is only valid for a single-digit zero")


@dataclass(frozen=True)
class IntegerScalingMetadata:
    """
    Per-element sign, digit count and leading digit, in column order.

    Stored column-wise; iterating or indexing yields IntegerScalingRecord
    views of single elements.
    """

    signs: Tuple[int, ...]
    n_digits: Tuple[int, ...]
    leading: Tuple[int, ...]

    def __post_init__(self):
        for name in ("signs", "n_digits", "leading"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not len(self.signs) == len(self.n_digits) == len(self.leading):
            raise InvalidParamsError("signs, digit counts and leading digits differ in length")
        if not self.signs:
            return

        signs = np.asarray(self.signs)
        n_digits = np.asarray(self.n_digits)
        leading = np.asarray(self.leading)
        if any(array.dtype.kind not in "iu" for array in (signs, n_digits, leading)):
            raise InvalidParamsError("integer scaling records must hold integers")
        valid = (
            ((signs == 1) | (signs == -1))
            & (n_digits >= 1) & (n_digits <= MAX_INTSCALE_DIGITS)
            & (leading >= 0) & (leading <= 9)
            & ((leading > 0) | (n_digits == 1))
        )
        if not valid.all():
            position = int(np.flatnonzero(~valid)[0])
            # re-raises the specific reason
            self[position]
            raise InvalidParamsError(f"invalid integer scaling record at index {position}")

    @classmethod
    def from_records(cls, records: Iterable[IntegerScalingRecord]) -> "IntegerScalingMetadata":
        records = tuple(records)
        return cls(
            tuple(record.sign for record in records),
            tuple(record.n_digits for record in records),
            tuple(record.leading for record in records),
        )

    @property
    def records(self) -> Tuple[IntegerScalingRecord, ...]:
        return tuple(self)

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[IntegerScalingRecord]:
        return map(IntegerScalingRecord, self.signs, self.n_digits, self.leading)

    def __getitem__(self, position: int) -> IntegerScalingRecord:
        return IntegerScalingRecord(self.signs[position], self.n_digits[position], self.leading[position])


Params = Union[MinMaxParams, ZScoreParams, DecimalScalingParams, IntegerScalingMetadata]

_METHOD_BY_PARAMS = {
    MinMaxParams: MINMAX,
    ZScoreParams: ZSCORE,
    DecimalScalingParams: DECIMAL,
    IntegerScalingMetadata: INTSCALE,
}


def method_of(params: Params) -> str:
    """Return the method tag a parameter object belongs to."""
    try:
        return _METHOD_BY_PARAMS[type(params)]
    except KeyError:
        raise InvalidParamsError(f"unsupported parameter type {type(params).__name__}")


@dataclass(frozen=True)
class NormalizedColumn:
    """Output of a normalize operation, tagged with its method and parameters."""

    name: str
    values: Tuple[float, ...]
    method: str
    params: Params

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)


def _expect_params(params: Params, expected: type, method: str) -> None:
    if not isinstance(params, expected):
        raise MethodMismatchError(
            f"{method} needs {expected.__name__}, got {type(params).__name__}",
            method=method,
        )


def _binary_scale(peak: float) -> float:
    # Largest power of two not above peak; dividing by it is exact
    if peak == 0 or not math.isfinite(peak):
        return 1.0
    _, exponent = math.frexp(peak)
    return math.ldexp(1.0, exponent - 1)


# --- Min-Max -----------------------------------------------------------------

def fit_min_max(
    col: NumericColumn,
    target_low: Real = DEFAULT_TARGET_LOW,
    target_high: Real = DEFAULT_TARGET_HIGH,
) -> MinMaxParams:
    """Compute the Min-Max parameters of a column for the boundary [C, D]."""
    values = InputValidator.validate_values(col.values, col.name)
    InputValidator.validate_boundary(target_low, target_high)
    return MinMaxParams(min(values), max(values), target_low, target_high)


def apply_min_max(col: NumericColumn, params: MinMaxParams) -> NormalizedColumn:
    """
    Map a column onto [C, D] with fitted Min-Max parameters.

    The source minimum lands exactly on C and the source maximum exactly on D.
    A degenerate range (min == max) maps every value to C.
    """
    _expect_params(params, MinMaxParams, MINMAX)
    values = InputValidator.validate_values(col.values, col.name)
    source = np.asarray(values, dtype=float)
    low, high = float(params.target_low), float(params.target_high)

    if params.is_degenerate:
        scaled = np.full(source.shape, low)
    else:
        src_min, src_max = float(params.src_min), float(params.src_max)
        # Halved operands keep max - min finite across the whole double range
        ratio = (source / 2 - src_min / 2) / (src_max / 2 - src_min / 2)
        scaled = (ratio * (high / 2 - low / 2) + low / 2) * 2
        scaled = np.where(source == src_min, low, scaled)
        scaled = np.where(source == src_max, high, scaled)

    return NormalizedColumn(col.name, tuple(scaled.tolist()), MINMAX, params)


def min_max_normalize(
    col: NumericColumn,
    target_low: Real = DEFAULT_TARGET_LOW,
    target_high: Real = DEFAULT_TARGET_HIGH,
) -> Tuple[NormalizedColumn, MinMaxParams]:
    """
    Linearly map a column so its minimum becomes C and its maximum D.

    Raises:
        EmptyColumnError, NonFiniteValueError, InvalidBoundaryError
    """
    params = fit_min_max(col, target_low, target_high)
    return apply_min_max(col, params), params


def min_max_denormalize(norm: NormalizedColumn, params: MinMaxParams) -> NumericColumn:
    """
    Invert Min-Max: ((y - C) / (D - C)) * (max - min) + min.

    Raises:
        DegenerateParamsError: If the source range was a single value
    """
    _expect_params(params, MinMaxParams, MINMAX)
    if params.is_degenerate:
        raise DegenerateParamsError(
            f"cannot invert a Min-Max map of the constant column {params.src_min}",
            method=MINMAX,
        )

    values = InputValidator.validate_values(norm.values, norm.name)
    scaled = np.asarray(values, dtype=float)
    low, high = float(params.target_low), float(params.target_high)
    src_min, src_max = float(params.src_min), float(params.src_max)

    ratio = (scaled / 2 - low / 2) / (high / 2 - low / 2)
    restored = (ratio * (src_max / 2 - src_min / 2) + src_min / 2) * 2
    restored = np.where(scaled == low, src_min, restored)
    restored = np.where(scaled == high, src_max, restored)
    return NumericColumn(norm.name, tuple(restored.tolist()))


# --- Z-score -----------------------------------------------------------------

def fit_z_score(col: NumericColumn) -> ZScoreParams:
    """
    Compute the mean and sample standard deviation of a column.

    A single value or a column of identical values gets std 0.
    """
    values = InputValidator.validate_values(col.values, col.name)
    if min(values) == max(values):
        return ZScoreParams(float(values[0]), 0.0, len(values))

    source = np.asarray(values, dtype=float)
    scale = _binary_scale(float(np.max(np.abs(source))))
    reduced = source / scale
    mean = float(np.mean(reduced)) * scale
    std = float(np.std(reduced, ddof=1)) * scale
    if not math.isfinite(std):
        raise OutOfRangeError(
            f"standard deviation of column '{col.name}' exceeds the float range",
            column=col.name, method=ZSCORE,
        )
    return ZScoreParams(mean, std, len(values))


def apply_z_score(col: NumericColumn, params: ZScoreParams) -> NormalizedColumn:
    """Standardize a column with fitted parameters; std 0 yields all zeros."""
    _expect_params(params, ZScoreParams, ZSCORE)
    values = InputValidator.validate_values(col.values, col.name)
    source = np.asarray(values, dtype=float)

    if params.std == 0:
        scaled = np.zeros(source.shape)
    else:
        scale = _binary_scale(max(float(np.max(np.abs(source))), abs(params.mean)))
        scaled = (source / scale - params.mean / scale) / (params.std / scale)

    return NormalizedColumn(col.name, tuple(scaled.tolist()), ZSCORE, params)


def z_score_normalize(col: NumericColumn) -> Tuple[NormalizedColumn, ZScoreParams]:
    """
    Standardize a column: (v - mean) / std, std with the n - 1 divisor.

    When all values are identical every output is 0.

    Raises:
        EmptyColumnError, NonFiniteValueError
    """
    params = fit_z_score(col)
    return apply_z_score(col, params), params


def z_score_denormalize(norm: NormalizedColumn, params: ZScoreParams) -> NumericColumn:
    """Invert Z-score: z * std + mean. With std 0 every output is the mean."""
    _expect_params(params, ZScoreParams, ZSCORE)
    values = InputValidator.validate_values(norm.values, norm.name)
    scale = _binary_scale(max(params.std, abs(params.mean)))
    restored = (np.asarray(values, dtype=float) * (params.std / scale) + params.mean / scale) * scale
    return NumericColumn(norm.name, tuple(restored.tolist()))


def z_score_normalize_rows(
    columns: Sequence[NumericColumn],
) -> Tuple[Tuple[NumericColumn, ...], Tuple[ZScoreParams, ...]]:
    """
    Standardize each row across several columns independently.

    Row i of the result is the Z-score of ``[c.values[i] for c in columns]``;
    a row whose values are all identical becomes all zeros.

    Returns:
        The standardized columns (same names and order) and one
        ZScoreParams per row
    """
    rows = _rows_of(columns)
    scaled_rows = []
    params = []
    for position, row in enumerate(rows, start=1):
        norm, row_params = z_score_normalize(NumericColumn(f"row{position}", row))
        scaled_rows.append(norm.values)
        params.append(row_params)

    return _columns_of(columns, scaled_rows), tuple(params)


def z_score_denormalize_rows(
    columns: Sequence[NumericColumn],
    params: Sequence[ZScoreParams],
) -> Tuple[NumericColumn, ...]:
    """Invert :func:`z_score_normalize_rows` with its per-row parameters."""
    rows = _rows_of(columns)
    InputValidator.validate_length(len(params), len(rows), "row parameters")

    restored_rows = []
    for position, (row, row_params) in enumerate(zip(rows, params), start=1):
        norm = NormalizedColumn(f"row{position}", row, ZSCORE, row_params)
        restored_rows.append(z_score_denormalize(norm, row_params).values)

    return _columns_of(columns, restored_rows)


def _rows_of(columns: Sequence[NumericColumn]) -> Sequence[Tuple[Real, ...]]:
    if not columns:
        raise EmptyColumnError("no columns given")
    length = len(columns[0])
    for col in columns[1:]:
        InputValidator.validate_length(length, len(col), f"column '{col.name}'")
    return list(zip(*(col.values for col in columns)))


def _columns_of(
    columns: Sequence[NumericColumn], rows: Sequence[Sequence[Real]]
) -> Tuple[NumericColumn, ...]:
    return tuple(
        NumericColumn(col.name, [row[position] for row in rows])
        for position, col in enumerate(columns)
    )


# --- Decimal Scaling -----------------------------------------------------------

def fit_decimal_scaling(col: NumericColumn) -> DecimalScalingParams:
    """
    Find the smallest non-negative j with max(|v|) / 10^j < 1.

    Raises:
        OutOfRangeError: If the column magnitude needs more than 10^308
    """
    values = InputValidator.validate_values(col.values, col.name)
    peak = float(np.max(np.abs(np.asarray(values, dtype=float))))

    j = 0
    while peak / 10.0 ** j >= 1:
        j += 1
        if j > MAX_DECIMAL_EXPONENT:
            raise OutOfRangeError(
                f"column '{col.name}' is too large for decimal scaling", method=DECIMAL
            )
    return DecimalScalingParams(j)


def apply_decimal_scaling(col: NumericColumn, params: DecimalScalingParams) -> NormalizedColumn:
    """Divide every value by 10^j."""
    _expect_params(params, DecimalScalingParams, DECIMAL)
    values = InputValidator.validate_values(col.values, col.name)
    scaled = np.asarray(values, dtype=float) / 10.0 ** params.j
    return NormalizedColumn(col.name, tuple(scaled.tolist()), DECIMAL, params)


def decimal_scaling_normalize(col: NumericColumn) -> Tuple[NormalizedColumn, DecimalScalingParams]:
    """
    Scale a column into (-1, 1) by a power of ten.

    Raises:
        EmptyColumnError, NonFiniteValueError
    """
    params = fit_decimal_scaling(col)
    return apply_decimal_scaling(col, params), params


def decimal_scaling_denormalize(
    norm: NormalizedColumn, params: DecimalScalingParams
) -> NumericColumn:
    """Invert Decimal Scaling: v' * 10^j."""
    _expect_params(params, DecimalScalingParams, DECIMAL)
    values = InputValidator.validate_values(norm.values, norm.name)
    restored = np.asarray(values, dtype=float) * 10.0 ** params.j
    return NumericColumn(norm.name, tuple(restored.tolist()))


# --- Integer Scaling -----------------------------------------------------------

def _check_intscale_range(integers: Tuple[int, ...], name: str) -> np.ndarray:
    try:
        array = np.asarray(integers, dtype=np.int64)
    except OverflowError:
        array = None
    if array is not None:
        outside = np.flatnonzero((array >= _INTSCALE_LIMIT) | (array <= -_INTSCALE_LIMIT))
        if not outside.size:
            return array
        row = int(outside[0]) + 1
    else:
        row = next(
            position for position, x in enumerate(integers, start=1)
            if abs(x) >= _INTSCALE_LIMIT
        )

    x = integers[row - 1]
    raise OutOfRangeError(
        f"value {x} at row {row} of column '{name}' has {digit_count(x)} digits; "
        f"integer scaling is exact up to {MAX_INTSCALE_DIGITS}",
        row=row, column=name, method=INTSCALE,
    )


def integer_scaling_normalize(
    col: NumericColumn,
) -> Tuple[NormalizedColumn, IntegerScalingMetadata]:
    """
    Scale every integer into [0, 1) by stripping its leading digit.

    Each element is transformed on its own: N is its digit count, A its
    leading digit, and Y = (|X| - A * 10^(N-1)) / 10^(N-1). Single-digit
    values and 0 map to 0. Y is held as a double, so integers are limited to
    16 digits, where the inverse is still exact.

    Raises:
        EmptyColumnError, NonFiniteValueError
        NonIntegerValueError: If any value has a fractional part
        OutOfRangeError: If a value has more than 16 digits
    """
    values = InputValidator.validate_values(col.values, col.name)
    integers = InputValidator.validate_integers(values, col.name)
    array = _check_intscale_range(integers, col.name)

    magnitude = np.abs(array)
    n_digits = np.maximum(np.searchsorted(_PLACES, magnitude, side="right"), 1)
    place = _PLACES[n_digits - 1]
    leading, rest = np.divmod(magnitude, place)
    scaled = rest / place

    meta = IntegerScalingMetadata(
        np.where(array < 0, -1, 1).tolist(), n_digits.tolist(), leading.tolist()
    )
    return NormalizedColumn(col.name, scaled.tolist(), INTSCALE, meta), meta


def integer_scaling_denormalize(
    norm: NormalizedColumn, meta: IntegerScalingMetadata
) -> NumericColumn:
    """
    Rebuild the integers: sign * (round(y * 10^(N-1)) + A * 10^(N-1)).

    Raises:
        LengthMismatchError: If the metadata does not cover every value
        OutOfRangeError: If a value lies outside [0, 1)
    """
    _expect_params(meta, IntegerScalingMetadata, INTSCALE)
    values = InputValidator.validate_values(norm.values, norm.name)
    InputValidator.validate_length(len(meta), len(values), f"column '{norm.name}'")
    InputValidator.validate_unit_interval(values, norm.name)

    place = _PLACES[np.asarray(meta.n_digits, dtype=np.int64) - 1]
    rest = np.rint(np.asarray(values, dtype=float) * place).astype(np.int64)
    restored = np.asarray(meta.signs, dtype=np.int64) * (
        rest + np.asarray(meta.leading, dtype=np.int64) * place
    )
    return NumericColumn(norm.name, restored.tolist())


# --- Dispatch ------------------------------------------------------------------

def normalize(
    col: NumericColumn,
    method: str,
    target_low: Real = DEFAULT_TARGET_LOW,
    target_high: Real = DEFAULT_TARGET_HIGH,
) -> Tuple[NormalizedColumn, Params]:
    """Normalize a column with the method named by its tag."""
    method = InputValidator.validate_method(method)
    if method == MINMAX:
        return min_max_normalize(col, target_low, target_high)
    if method == ZSCORE:
        return z_score_normalize(col)
    if method == DECIMAL:
        return decimal_scaling_normalize(col)
    return integer_scaling_normalize(col)


_DENORMALIZERS = {
    MINMAX: min_max_denormalize,
    ZSCORE: z_score_denormalize,
    DECIMAL: decimal_scaling_denormalize,
    INTSCALE: integer_scaling_denormalize,
}


def denormalize(norm: NormalizedColumn, params: Optional[Params] = None) -> NumericColumn:
    """
    Invert a normalized column, using its own parameters unless given others.

    Raises:
        MethodMismatchError: If the parameters belong to another method
    """
    params = norm.params if params is None else params
    method = InputValidator.validate_method(norm.method)
    if method_of(params) != method:
        raise MethodMismatchError(
            f"column '{norm.name}' was normalized with {method}, "
            f"parameters are for {method_of(params)}",
            method=method,
        )
    return _DENORMALIZERS[method](norm, params)
