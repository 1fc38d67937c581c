"""Numerical machinery for subspherical functions, gauge-built subharmonic
test functions, and growth inequalities for zero sets in the unit ball."""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    EvaluationError,
    InvalidGaugeError,
    SchemaError,
    UnsupportedDimensionError,
)
from .normalization import (
    DimensionContext,
    NormConstants,
    ball_volume,
    hausdorff_weight,
    norm_constants,
    riesz_normalizer,
    sphere_area,
)

__all__ = [
    "__version__",
    "DomainError",
    "EvaluationError",
    "InvalidGaugeError",
    "SchemaError",
    "UnsupportedDimensionError",
    "DimensionContext",
    "NormConstants",
    "ball_volume",
    "hausdorff_weight",
    "norm_constants",
    "riesz_normalizer",
    "sphere_area",
]
