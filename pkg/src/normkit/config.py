"""
Configuration module for normkit.

Contains constants and configuration settings used throughout the application.
"""

# Method tags accepted on the command line and stored in sidecars
MINMAX = "minmax"
ZSCORE = "zscore"
DECIMAL = "decimal"
INTSCALE = "intscale"

METHODS = (MINMAX, ZSCORE, DECIMAL, INTSCALE)

# Column headings used by the comparison report
METHOD_LABELS = {
    MINMAX: "Min-Max Normalization",
    ZSCORE: "Z-score Normalization",
    DECIMAL: "Decimal Scaling Normalization",
    INTSCALE: "Integer Scaling Normalization",
}

# Short names for chart legends and titles
METHOD_SHORT_NAMES = {
    MINMAX: "Min-Max",
    ZSCORE: "Z-score",
    DECIMAL: "Decimal Scaling",
    INTSCALE: "Integer Scaling",
}

# Min-Max target boundary [C, D]
DEFAULT_TARGET_LOW = 0.0
DEFAULT_TARGET_HIGH = 1.0

# Display rounding for written values and reports
DEFAULT_DECIMALS = 3
MAX_DECIMALS = 17

# Integer Scaling stores Y as a double; up to 16 digits the rest below the
# leading digit (< 10^15) and its place value are exact, so the inverse is exact
MAX_INTSCALE_DIGITS = 16

# Decimal numbers accepted in CSV and sidecar input (exponents allowed, never emitted)
NUMBER_PATTERN = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"

# Names given to headerless CSV columns: col0, col1, ...
DEFAULT_COLUMN_PREFIX = "col"

# Sidecar files
SIDECAR_MAGIC = "normkit-meta"
SIDECAR_VERSION = 1
SIDECAR_SUFFIX = ".normmeta"
SIDECAR_RECORD_HEADER = "index,sign,n_digits,leading"

# SVG chart geometry (pixels)
CHART_WIDTH = 640
CHART_HEIGHT = 480
CHART_MARGIN_LEFT = 64
CHART_MARGIN_RIGHT = 24
CHART_MARGIN_TOP = 48
CHART_MARGIN_BOTTOM = 72
CHART_Y_TICKS = 5
CHART_AUTO_MARGIN = 0.05

# Series colours, cycled in method order
CHART_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
)

# Environment switch that turns off all diagnostic styling
NO_COLOR_ENV = "NORMKIT_NO_COLOR"
