"""
Input validation utilities for normkit.

Provides validation for column values, method tags, boundaries and
rounding options so the transforms can assume well-formed inputs.
"""

import math
from numbers import Integral, Real
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .config import MAX_DECIMALS, METHODS
from .exceptions import (
    EmptyColumnError,
    InvalidBoundaryError,
    LengthMismatchError,
    NonFiniteValueError,
    NonIntegerValueError,
    OutOfRangeError,
    UnknownMethodError,
    ValidationError,
)


class InputValidator:
    """
    Validates user inputs and column data to ensure data integrity.
    """

    @staticmethod
    def validate_values(values: Iterable[Real], name: str = "") -> Tuple[Real, ...]:
        """
        Validate the values of a numeric column.

        Args:
            values: Column values in order
            name: Column name used in error messages

        Returns:
            The values as a tuple

        Raises:
            EmptyColumnError: If there are no values
            NonFiniteValueError: If a value is NaN or infinite
            ValidationError: If a value is not a real number
        """
        values = tuple(values)
        if not values:
            raise EmptyColumnError(f"column '{name}' has no values", column=name)

        # Plain int/float columns are checked in one pass; anything numpy
        # cannot hold natively falls through to the per-value checks
        if not any(isinstance(value, bool) for value in values):
            array = _as_array(values)
            if array.dtype.kind in "iu":
                return values
            if array.dtype.kind == "f" and np.isfinite(array).all():
                return values

        for row, value in enumerate(values, start=1):
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ValidationError(
                    f"value {value!r} at row {row} of column '{name}' is not a number",
                    row=row, column=name,
                )
            if not isinstance(value, Integral) and not math.isfinite(value):
                raise NonFiniteValueError(
                    f"value {value!r} at row {row} of column '{name}' is not finite",
                    row=row, column=name,
                )
        return values

    @staticmethod
    def validate_integers(values: Sequence[Real], name: str = "") -> Tuple[int, ...]:
        """
        Validate that every value is an integer.

        Integral floats such as ``12.0`` are accepted and converted; anything
        with a fractional part is rejected rather than truncated.

        Raises:
            NonIntegerValueError: If a value has a fractional part
        """
        array = _as_array(values)
        if array.dtype.kind in "iu":
            return tuple(array.tolist())

        integers = []
        for row, value in enumerate(values, start=1):
            if isinstance(value, Integral):
                integers.append(int(value))
            elif float(value).is_integer():
                integers.append(int(value))
            else:
                raise NonIntegerValueError(
                    f"value {value!r} at row {row} of column '{name}' is not an integer",
                    row=row, column=name,
                )
        return tuple(integers)

    @staticmethod
    def validate_boundary(target_low: Real, target_high: Real) -> Tuple[Real, Real]:
        """
        Validate a Min-Max target boundary [C, D].

        Raises:
            InvalidBoundaryError: If a bound is not finite or C >= D
        """
        for bound in (target_low, target_high):
            if isinstance(bound, bool) or not isinstance(bound, Real) or not math.isfinite(bound):
                raise InvalidBoundaryError(f"boundary value {bound!r} is not a finite number")

        if not target_low < target_high:
            raise InvalidBoundaryError(
                f"boundary [{target_low}, {target_high}] is empty: C must be less than D"
            )
        return target_low, target_high

    @staticmethod
    def validate_method(method: str) -> str:
        """
        Validate a normalization method tag.

        Returns:
            The tag, lower-cased and stripped

        Raises:
            UnknownMethodError: If the tag is not one of the supported methods
        """
        tag = (method or "").strip().lower()
        if tag not in METHODS:
            raise UnknownMethodError(
                f"unknown method '{method}'. Supported methods: {', '.join(METHODS)}"
            )
        return tag

    @staticmethod
    def validate_methods(methods: Union[str, Sequence[str]]) -> List[str]:
        """
        Validate a method list, given either as a sequence or comma-separated text.

        Raises:
            ValidationError: If the list is empty or repeats a method
            UnknownMethodError: If any tag is unknown
        """
        if isinstance(methods, str):
            methods = [part for part in methods.split(",") if part.strip()]

        tags = [InputValidator.validate_method(method) for method in methods]
        if not tags:
            raise ValidationError("at least one method is required")

        duplicates = sorted({tag for tag in tags if tags.count(tag) > 1})
        if duplicates:
            raise ValidationError(f"methods listed more than once: {', '.join(duplicates)}")
        return tags

    @staticmethod
    def validate_decimals(decimals: int) -> int:
        """
        Validate a display rounding precision.

        Raises:
            ValidationError: If decimals is outside 0..MAX_DECIMALS
        """
        if isinstance(decimals, bool) or not isinstance(decimals, Integral):
            raise ValidationError("decimals must be an integer")

        if not 0 <= decimals <= MAX_DECIMALS:
            raise ValidationError(f"decimals must be between 0 and {MAX_DECIMALS}")
        return int(decimals)

    @staticmethod
    def validate_unit_interval(values: Sequence[Real], name: str = "") -> None:
        """
        Validate that every value lies in [0, 1).

        Raises:
            OutOfRangeError: If a value is negative or at least 1
        """
        array = np.asarray(values, dtype=float)
        outside = np.flatnonzero((array < 0) | (array >= 1))
        if outside.size:
            row = int(outside[0]) + 1
            value = values[row - 1]
            raise OutOfRangeError(
                f"value {value!r} at row {row} of column '{name}' is outside [0, 1)",
                row=row, column=name,
            )

    @staticmethod
    def validate_length(expected: int, actual: int, what: str) -> None:
        """
        Validate that two lengths agree.

        Raises:
            LengthMismatchError: If the lengths differ
        """
        if expected != actual:
            raise LengthMismatchError(f"{what}: expected {expected} values, found {actual}")


def _as_array(values: Sequence[Real]) -> np.ndarray:
    try:
        return np.asarray(values)
    except (TypeError, ValueError, OverflowError):
        return np.asarray(values, dtype=object)
