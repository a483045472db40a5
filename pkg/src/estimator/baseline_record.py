"""Reference factoring run that anchors every projection."""

import math
from dataclasses import dataclass

from src.effort.bit_length import BitLength
from src.errors import InputError
from src.moore.calendar_date import CalendarDate


@dataclass(frozen=True)
class BaselineRecord:
    bits: BitLength
    wall_hours: float
    date: CalendarDate

    def __post_init__(self):
        object.__setattr__(self, 'bits', BitLength.of(self.bits))
        if not math.isfinite(self.wall_hours) or self.wall_hours <= 0:
            raise InputError(f"baseline wall_hours must be positive, got {self.wall_hours}")

    def to_dict(self) -> dict:
        return {'bits': self.bits.bits, 'wall_hours': self.wall_hours, 'date': str(self.date)}


# RSA-512 factored on a public cloud in under four hours, 2015
DEFAULT_BASELINE = BaselineRecord(BitLength(512), 4.0, CalendarDate(2015))
