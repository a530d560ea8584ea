"""
Fit/transform scaler objects for normkit.

A scaler learns its parameters from one column with ``fit`` and can then
``transform`` any column with them and ``inverse_transform`` the result.
Integer Scaling is element-local, so its scaler has nothing to learn: the
metadata travels with each transformed column instead.
"""

from abc import ABC, abstractmethod
from numbers import Real
from typing import Optional, Sequence, Tuple, Union

from . import normcore
from .config import DECIMAL, DEFAULT_TARGET_HIGH, DEFAULT_TARGET_LOW, INTSCALE, MINMAX, ZSCORE
from .exceptions import NotFittedError
from .normcore import MinMaxParams, NormalizedColumn, NumericColumn, Params
from .validation import InputValidator


class Scaler(ABC):
    """Base class for the four normalization scalers."""

    method: str = ""

    def __init__(self):
        self._params: Optional[Params] = None

    @property
    def is_fitted(self) -> bool:
        return self._params is not None

    @property
    def params(self) -> Params:
        if self._params is None:
            raise NotFittedError(f"{type(self).__name__} is not fitted yet", method=self.method)
        return self._params

    @abstractmethod
    def fit(self, col: NumericColumn) -> "Scaler":
        """Learn the parameters of ``col``."""

    @abstractmethod
    def transform(self, col: NumericColumn) -> NormalizedColumn:
        """Normalize ``col`` with the fitted parameters."""

    def fit_transform(self, col: NumericColumn) -> NormalizedColumn:
        return self.fit(col).transform(col)

    def inverse_transform(
        self, norm: Union[NormalizedColumn, NumericColumn, Sequence[Real]]
    ) -> NumericColumn:
        """
        Undo ``transform``.

        Accepts a NormalizedColumn, or bare values (a NumericColumn or a
        sequence) which are paired with this scaler's parameters.
        """
        if isinstance(norm, NormalizedColumn):
            return normcore.denormalize(norm, self.params)
        if isinstance(norm, NumericColumn):
            name, values = norm.name, norm.values
        else:
            name, values = "", tuple(norm)
        return normcore.denormalize(NormalizedColumn(name, values, self.method, self.params))


class MinMaxScaler(Scaler):
    """Min-Max scaler onto the boundary [target_low, target_high]."""

    method = MINMAX

    def __init__(
        self,
        target_low: Real = DEFAULT_TARGET_LOW,
        target_high: Real = DEFAULT_TARGET_HIGH,
    ):
        super().__init__()
        self.target_low, self.target_high = InputValidator.validate_boundary(
            target_low, target_high
        )

    def fit(self, col: NumericColumn) -> "MinMaxScaler":
        self._params = normcore.fit_min_max(col, self.target_low, self.target_high)
        return self

    def transform(self, col: NumericColumn) -> NormalizedColumn:
        return normcore.apply_min_max(col, self.params)


class ZScoreScaler(Scaler):
    method = ZSCORE

    def fit(self, col: NumericColumn) -> "ZScoreScaler":
        self._params = normcore.fit_z_score(col)
        return self

    def transform(self, col: NumericColumn) -> NormalizedColumn:
        return normcore.apply_z_score(col, self.params)


class DecimalScaler(Scaler):
    method = DECIMAL

    def fit(self, col: NumericColumn) -> "DecimalScaler":
        self._params = normcore.fit_decimal_scaling(col)
        return self

    def transform(self, col: NumericColumn) -> NormalizedColumn:
        return normcore.apply_decimal_scaling(col, self.params)


class IntegerScaler(Scaler):
    """
    Integer Scaling scaler.

    ``fit`` only checks the column; ``transform`` computes fresh metadata for
    every column it sees and remembers the latest one for ``params``.
    """

    method = INTSCALE

    def fit(self, col: NumericColumn) -> "IntegerScaler":
        InputValidator.validate_integers(
            InputValidator.validate_values(col.values, col.name), col.name
        )
        return self

    def transform(self, col: NumericColumn) -> NormalizedColumn:
        norm, self._params = normcore.integer_scaling_normalize(col)
        return norm


_SCALERS = {
    MINMAX: MinMaxScaler,
    ZSCORE: ZScoreScaler,
    DECIMAL: DecimalScaler,
    INTSCALE: IntegerScaler,
}


def make_scaler(
    method: str,
    boundary: Tuple[Real, Real] = (DEFAULT_TARGET_LOW, DEFAULT_TARGET_HIGH),
) -> Scaler:
    """Create an unfitted scaler for a method tag; boundary applies to Min-Max only."""
    method = InputValidator.validate_method(method)
    if method == MINMAX:
        return MinMaxScaler(*boundary)
    return _SCALERS[method]()


def scaler_from_params(params: Params) -> Scaler:
    """Create a scaler already fitted with saved parameters."""
    method = normcore.method_of(params)
    if isinstance(params, MinMaxParams):
        scaler: Scaler = MinMaxScaler(params.target_low, params.target_high)
    else:
        scaler = _SCALERS[method]()
    scaler._params = params
    return scaler


__all__ = [
    "Scaler",
    "MinMaxScaler",
    "ZScoreScaler",
    "DecimalScaler",
    "IntegerScaler",
    "make_scaler",
    "scaler_from_params",
]
