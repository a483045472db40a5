"""Exponential trend of factored bit length against calendar time."""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.errors import FitError
from src.records.factoring_record import FactoringRecord


MIN_FIT_POINTS = 3


@dataclass(frozen=True)
class TrendFit:
    """bits(t) = a * exp(b * (t - t0)); residuals are in log space."""

    a: float
    b: float
    t0: float
    residuals: Tuple[float, ...]
    r_squared: float

    def predict(self, year: float) -> float:
        return self.a * math.exp(self.b * (year - self.t0))

    @property
    def doubling_years(self) -> float:
        """Years for the factored bit length to double; inf for a flat trend."""
        return math.log(2.0) / self.b if self.b > 0 else math.inf

    def to_dict(self) -> dict:
        return {
            'a': self.a,
            'b': self.b,
            't0': self.t0,
            'r_squared': self.r_squared,
            'residuals': list(self.residuals),
        }


def fit_trend_points(years: Sequence[float], bits: Sequence[float]) -> TrendFit:
    """Least-squares line through (year - t0, ln bits), returned as an exponential.

    Raises:
        FitError: fewer than three points, or every point on the same date.
    """
    if len(years) != len(bits):
        raise FitError(f"{len(years)} dates but {len(bits)} bit lengths")
    if len(years) < MIN_FIT_POINTS:
        raise FitError(f"trend fit needs at least {MIN_FIT_POINTS} records, got {len(years)}")
    t = np.asarray(years, dtype=float)
    if np.all(t == t[0]):
        raise FitError("trend fit needs records on at least two distinct dates")
    y = np.log(np.asarray(bits, dtype=float))
    t0 = float(t.min())
    x = t - t0
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (intercept + slope * x)
    ss_res = float(np.sum(residuals ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return TrendFit(
        a=float(math.exp(intercept)),
        b=float(slope),
        t0=t0,
        residuals=tuple(float(r) for r in residuals),
        r_squared=float(np.clip(r_squared, 0.0, 1.0)),
    )


def fit_trend(records: List[FactoringRecord]) -> TrendFit:
    """Fit the bit-length trend of a record set, dated at month centres."""
    return fit_trend_points(
        [r.date_factored.midpoint_year for r in records],
        [r.effective_bits.bits for r in records],
    )
