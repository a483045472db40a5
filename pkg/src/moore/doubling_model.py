"""Compute-power doubling law."""

import math
from dataclasses import dataclass

from src.errors import InputError


@dataclass(frozen=True)
class DoublingModel:
    """Compute power doubles every ``period_months`` months."""

    period_months: float
    label: str = ''

    def __post_init__(self):
        if not math.isfinite(self.period_months) or self.period_months <= 0:
            raise InputError(f"doubling period must be positive and finite, got {self.period_months}")

    @property
    def period_years(self) -> float:
        return self.period_months / 12.0

    def doublings(self, elapsed_months: float) -> float:
        return elapsed_months / self.period_months

    def to_dict(self) -> dict:
        return {'period_months': self.period_months, 'label': self.label}
