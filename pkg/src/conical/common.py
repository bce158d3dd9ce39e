"""Shared types, status codes, region tags and numeric configuration.

Status codes round-trip to the integer error flags of the original
interface: 0 ok, 1 overflow/underflow (computation failed), 2 arguments
out of range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum

LOG_MAX_DOUBLE = 709.782712893384  # ln(max finite binary64)


class EvalStatus(IntEnum):
    Ok = 0
    OverUnderflow = 1
    OutOfRange = 2


class Region(Enum):
    SeriesNear1 = "SeriesNear1"
    KummerLargeTau = "KummerLargeTau"
    LargeX = "LargeX"
    Recurrence = "Recurrence"
    OdeMarch = "OdeMarch"


class OutOfRangeError(ValueError):
    pass


class OverUnderflowError(ArithmeticError):
    pass


@dataclass(frozen=True)
class EvalPoint:
    x: float
    m: int
    tau: float


@dataclass
class EvalResult:
    value: float
    est_rel_err: float
    status: EvalStatus
    region: Region


@dataclass
class NumericConfig:
    series_max_terms: int = 200
    kummer_terms: int = 7          # N in the Kummer-type expansion, k = 0..N
    tau_kummer_min: float = 40.0   # calibrated; see scripts/calibrate_thresholds.py
    x_largex_min: float = 1.2
    series_tau_cut: float = 3.0    # series used while tau*sqrt((x-1)/2) <= this
    overflow_log_limit: float = 690.0  # natural-log scale, just under binary64 max

    def validate_config(self) -> None:
        if self.series_max_terms <= 0 or self.kummer_terms < 0:
            raise ValueError("term counts must be positive")
        if self.x_largex_min <= 1.0:
            raise ValueError("x_largex_min must exceed 1")
        if self.tau_kummer_min <= 0 or self.overflow_log_limit <= 0:
            raise ValueError("thresholds must be positive")


DEFAULT_CONFIG = NumericConfig()


def validate(point: EvalPoint, kind: str) -> EvalStatus:
    """Domain check for a single evaluation; kind is 'P', 'R' or 'PR'.

    Pure and total: returns a status, never raises.
    """
    if kind not in ("P", "R", "PR"):
        return EvalStatus.OutOfRange
    x, m, tau = point.x, point.m, point.tau
    if not (math.isfinite(x) and math.isfinite(tau)):
        return EvalStatus.OutOfRange
    if not isinstance(m, int) or m < 0:
        return EvalStatus.OutOfRange
    if tau < 0:
        return EvalStatus.OutOfRange
    if kind in ("R", "PR"):
        if x <= 1.0:
            return EvalStatus.OutOfRange
    else:
        if x <= -1.0:
            return EvalStatus.OutOfRange
    return EvalStatus.Ok
