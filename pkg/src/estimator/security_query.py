"""A request for a key size that must survive a protection lifespan."""

import enum
import math
from dataclasses import dataclass

from src.errors import InputError
from src.moore.calendar_date import CalendarDate


class ProtectionMode(enum.Enum):
    # break time evaluated with the compute available at expiry
    END_OF_LIFE = 'end-of-life'
    # attacker works during the whole lifespan while compute keeps doubling
    CUMULATIVE_WORK = 'cumulative-work'

    @classmethod
    def parse(cls, value) -> 'ProtectionMode':
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise InputError(f"unknown mode {value!r}; choose from {[m.value for m in cls]}") from None


@dataclass(frozen=True)
class SecurityQuery:
    protect_from: CalendarDate
    lifespan_years: float
    margin: float = 1.0
    mode: ProtectionMode = ProtectionMode.END_OF_LIFE

    def __post_init__(self):
        object.__setattr__(self, 'mode', ProtectionMode.parse(self.mode))
        if not math.isfinite(self.lifespan_years) or self.lifespan_years < 0:
            raise InputError(f"lifespan_years must be non-negative, got {self.lifespan_years}")
        if not math.isfinite(self.margin) or self.margin <= 0:
            raise InputError(f"margin must be positive, got {self.margin}")

    @property
    def lifespan_months(self) -> int:
        return round(self.lifespan_years * 12)

    @property
    def expires(self) -> CalendarDate:
        return self.protect_from.plus_months(self.lifespan_months)

    @property
    def required_years(self) -> float:
        return self.margin * self.lifespan_years

    def to_dict(self) -> dict:
        return {
            'protect_from': str(self.protect_from),
            'lifespan_years': self.lifespan_years,
            'margin': self.margin,
            'mode': self.mode.value,
            'expires': str(self.expires),
        }
