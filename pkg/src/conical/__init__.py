"""Conical function toolkit: P and R evaluators with verification harness."""

from conical.common import (
    DEFAULT_CONFIG,
    EvalPoint,
    EvalResult,
    EvalStatus,
    NumericConfig,
    Region,
)

__all__ = [
    "DEFAULT_CONFIG",
    "EvalPoint",
    "EvalResult",
    "EvalStatus",
    "NumericConfig",
    "Region",
]

__version__ = "0.1.0"
