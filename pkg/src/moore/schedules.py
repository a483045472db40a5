"""Reproductions of the published doubling tables."""

import math
from dataclasses import dataclass
from typing import List, Optional

from src.errors import InputError
from src.moore.calendar_date import CalendarDate
from src.moore.doubling_model import DoublingModel
from src.moore.growth import calibrate_doubling, months_between, project_hours


@dataclass(frozen=True)
class ScheduleRow:
    year: float
    years_elapsed: float
    minutes: float

    def to_dict(self) -> dict:
        return {'year': self.year, 'years': self.years_elapsed, 'minutes': self.minutes}


@dataclass(frozen=True)
class DoublingRow:
    name: str
    year: int
    months_between: Optional[int]
    doubling_months: Optional[float]
    hours: float

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'year': self.year,
            'months_between': self.months_between,
            'doubling_months': self.doubling_months,
            'hours': self.hours,
        }


def table7_schedule(start_minutes: float, start: CalendarDate, steps: int,
                    interval_years: float = 1.5) -> List[ScheduleRow]:
    """Reproduce the printed "doubling power every 1.5 years" schedule.

    Row 0 is the reference (start, start_minutes); row k >= 1 sits
    interval_years * 2**(k-1) years after start with start_minutes / 2**k.
    ``steps`` counts rows including the reference row. This is the table as
    printed, not the exponential model, which would halve every interval.
    """
    if not math.isfinite(start_minutes) or start_minutes <= 0:
        raise InputError(f"start_minutes must be positive, got {start_minutes}")
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise InputError(f"steps must be a positive integer, got {steps!r}")
    rows = [ScheduleRow(start.decimal_year, 0.0, float(start_minutes))]
    for k in range(1, steps):
        years = interval_years * 2 ** (k - 1)
        rows.append(ScheduleRow(start.decimal_year + years, years, math.ldexp(start_minutes, -k)))
    return rows


def table4_rows(hours_early: float = 5040.0, hours_late: float = 4.0,
                early: CalendarDate = CalendarDate(1999), late: CalendarDate = CalendarDate(2015),
                assumed: DoublingModel = DoublingModel(18.0), name: str = 'RSA-512') -> List[DoublingRow]:
    """Reference run, projection under an assumed period, and calibrated period."""
    elapsed = months_between(early, late)
    calibrated = calibrate_doubling(hours_early, hours_late, elapsed)
    return [
        DoublingRow(name, early.year, None, None, hours_early),
        DoublingRow(name, late.year, elapsed, assumed.period_months,
                    project_hours(hours_early, assumed, elapsed)),
        DoublingRow(name, late.year, elapsed, calibrated.period_months, hours_late),
    ]
