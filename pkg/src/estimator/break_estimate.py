"""Projected time to factor a modulus."""

import math
from dataclasses import dataclass

from src.effort.bit_length import BitLength
from src.errors import InputError
from src.moore.calendar_date import CalendarDate
from src.util.log_scale import ln_to_log10, render_scientific


HOURS_PER_YEAR = 8760.0
HOURS_PER_MONTH = HOURS_PER_YEAR / 12.0


@dataclass(frozen=True)
class BreakEstimate:
    """Wall-clock estimate; ``ln_hours`` is authoritative, ``hours`` may be inf."""

    bits: BitLength
    at_date: CalendarDate
    hours: float
    ln_hours: float

    def __post_init__(self):
        if not math.isfinite(self.ln_hours):
            raise InputError(f"break estimate must have a finite log value, got {self.ln_hours}")

    @property
    def years(self) -> float:
        return self.hours / HOURS_PER_YEAR

    @property
    def minutes(self) -> float:
        return self.hours * 60.0

    @property
    def log10_hours(self) -> float:
        return ln_to_log10(self.ln_hours)

    def to_dict(self) -> dict:
        return {
            'bits': self.bits.bits,
            'at_date': str(self.at_date),
            'hours': self.hours if math.isfinite(self.hours) else render_scientific(self.ln_hours),
            'years': self.years if math.isfinite(self.hours) else render_scientific(self.ln_hours - math.log(HOURS_PER_YEAR)),
            'log10_hours': self.log10_hours,
        }
