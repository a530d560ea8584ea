"""
Custom exceptions for normkit.

Every exception carries a stable ``code`` that names the failure in
diagnostics, plus optional row, column and method annotations so callers
can point at the offending value.
"""

from typing import Optional, Union


class NormkitError(Exception):
    """Base exception for all normkit errors."""

    code = "NormkitError"

    def __init__(
        self,
        message: str,
        *,
        row: Optional[int] = None,
        column: Optional[Union[int, str]] = None,
        method: Optional[str] = None,
    ):
        super().__init__(message)
        self.message = message
        self.row = row
        self.column = column
        self.method = method

    def __str__(self) -> str:
        if self.method:
            return f"{self.method}: {self.message}"
        return self.message


class ValidationError(NormkitError):
    """Raised when values, parameters or selectors are invalid."""

    code = "ValidationError"


class EmptyColumnError(ValidationError):
    code = "EmptyColumn"


class NonFiniteValueError(ValidationError):
    code = "NonFiniteValue"


class NonIntegerValueError(ValidationError):
    code = "NonIntegerValue"


class InvalidBoundaryError(ValidationError):
    code = "InvalidBoundary"


class DegenerateParamsError(ValidationError):
    code = "DegenerateParams"


class InvalidParamsError(ValidationError):
    code = "InvalidParams"


class LengthMismatchError(ValidationError):
    code = "LengthMismatch"


class OutOfRangeError(ValidationError):
    code = "OutOfRange"


class MethodMismatchError(ValidationError):
    code = "MethodMismatch"


class UnknownMethodError(ValidationError):
    code = "UnknownMethod"


class ColumnNotFoundError(ValidationError):
    code = "ColumnNotFound"


class NotFittedError(ValidationError):
    """Raised when a scaler is used before ``fit``."""

    code = "NotFitted"


class DataProcessingError(NormkitError):
    """Raised when an input file cannot be read or parsed."""

    code = "DataProcessingError"


class InputNotFoundError(DataProcessingError):
    code = "FileNotFound"


class InputReadError(DataProcessingError):
    code = "IoError"


class CsvParseError(DataProcessingError):
    """Raised for an unparseable CSV cell; always carries row and column."""

    code = "ParseError"


class RaggedRowsError(DataProcessingError):
    code = "RaggedRows"


class EmptyFileError(DataProcessingError):
    code = "EmptyFile"


class FormatError(DataProcessingError):
    code = "FormatError"


class VersionError(DataProcessingError):
    code = "VersionError"


class OutputError(NormkitError):
    """Raised when output operations fail."""

    code = "IoError"
