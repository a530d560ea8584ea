"""
normkit

A Python package for dataset normalization: Min-Max, Z-score, Decimal
Scaling and Integer Scaling with exact inverse transforms, CSV and
parameter-sidecar I/O, and side-by-side comparison reports.
"""

__version__ = "0.1.0"

from .normcore import (
    NumericColumn,
    NormalizedColumn,
    MinMaxParams,
    ZScoreParams,
    DecimalScalingParams,
    IntegerScalingRecord,
    IntegerScalingMetadata,
    digit_count,
    leading_digit,
    min_max_normalize,
    min_max_denormalize,
    z_score_normalize,
    z_score_denormalize,
    z_score_normalize_rows,
    z_score_denormalize_rows,
    decimal_scaling_normalize,
    decimal_scaling_denormalize,
    integer_scaling_normalize,
    integer_scaling_denormalize,
    normalize,
    denormalize,
)
from .scalers import (
    MinMaxScaler,
    ZScoreScaler,
    DecimalScaler,
    IntegerScaler,
    make_scaler,
    scaler_from_params,
)
from .dataio import (
    Dataset,
    ParamSidecar,
    read_csv,
    write_csv,
    save_sidecar,
    load_sidecar,
    save_sidecars,
    load_sidecars,
)
from .report import ComparisonTable, compare, render_markdown, render_svg_chart
from .exceptions import (
    NormkitError,
    ValidationError,
    DataProcessingError,
    OutputError,
)

# Expose main API for programmatic use
__all__ = [
    "NumericColumn",
    "NormalizedColumn",
    "MinMaxParams",
    "ZScoreParams",
    "DecimalScalingParams",
    "IntegerScalingRecord",
    "IntegerScalingMetadata",
    "digit_count",
    "leading_digit",
    "min_max_normalize",
    "min_max_denormalize",
    "z_score_normalize",
    "z_score_denormalize",
    "z_score_normalize_rows",
    "z_score_denormalize_rows",
    "decimal_scaling_normalize",
    "decimal_scaling_denormalize",
    "integer_scaling_normalize",
    "integer_scaling_denormalize",
    "normalize",
    "denormalize",
    "MinMaxScaler",
    "ZScoreScaler",
    "DecimalScaler",
    "IntegerScaler",
    "make_scaler",
    "scaler_from_params",
    "Dataset",
    "ParamSidecar",
    "read_csv",
    "write_csv",
    "save_sidecar",
    "load_sidecar",
    "save_sidecars",
    "load_sidecars",
    "ComparisonTable",
    "compare",
    "render_markdown",
    "render_svg_chart",
    "NormkitError",
    "ValidationError",
    "DataProcessingError",
    "OutputError",
]
