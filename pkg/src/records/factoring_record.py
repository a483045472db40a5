"""One historical factoring event."""

import enum
import math
from dataclasses import dataclass
from typing import Optional

from src.effort.bit_length import MAX_BITS, BitLength
from src.errors import InputError, RecordValidationError
from src.moore.calendar_date import CalendarDate


# Largest digit count whose bit length stays within the BitLength cap
MAX_DIGITS = 301_029

# Allowed gap between a record's bits and its digit-derived bit bound
DIGITS_BITS_TOLERANCE = 4


class Algorithm(enum.Enum):
    MPQS = 'MPQS'
    NFS = 'NFS'
    OTHER = 'other'

    @classmethod
    def parse(cls, text: str) -> 'Algorithm':
        key = (text or '').strip()
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise InputError(f"unknown algorithm {text!r}; choose from {[m.value for m in cls]}")


def digits_to_bits(decimal_digits: int) -> BitLength:
    """Upper bound on the bit length of a d-digit number, ceil(d * log2 10).

    Computed as the bit length of 10**d, which equals the ceiling because
    log2 10 is irrational.
    """
    if isinstance(decimal_digits, bool) or not isinstance(decimal_digits, int) or decimal_digits < 1:
        raise InputError(f"decimal digits must be a positive integer, got {decimal_digits!r}")
    if decimal_digits > MAX_DIGITS:
        raise InputError(f"{decimal_digits} digits exceeds the {MAX_BITS}-bit cap")
    return BitLength((10 ** decimal_digits).bit_length())


@dataclass(frozen=True)
class FactoringRecord:
    name: str
    date_factored: CalendarDate
    algorithm: Algorithm = Algorithm.OTHER
    bits: Optional[int] = None
    decimal_digits: Optional[int] = None
    wall_hours: Optional[float] = None
    mips_years: Optional[float] = None

    def __post_init__(self):
        if not self.name or not self.name.strip():
            raise RecordValidationError("name must not be empty")
        if self.bits is None and self.decimal_digits is None:
            raise RecordValidationError("one of bits or decimal_digits is required", self.name)
        try:
            if self.bits is not None:
                BitLength(self.bits)
            derived = digits_to_bits(self.decimal_digits) if self.decimal_digits is not None else None
        except InputError as e:
            raise RecordValidationError(str(e), self.name) from None
        if self.bits is not None and derived is not None:
            if abs(self.bits - derived.bits) > DIGITS_BITS_TOLERANCE:
                raise RecordValidationError(
                    f"{self.bits} bits inconsistent with {self.decimal_digits} digits "
                    f"(~{derived.bits} bits)", self.name)
        for field_name in ('wall_hours', 'mips_years'):
            value = getattr(self, field_name)
            if value is not None and (not math.isfinite(value) or value <= 0):
                raise RecordValidationError(f"{field_name} must be positive, got {value}", self.name)

    @property
    def effective_bits(self) -> BitLength:
        """Stated bit length, else the bound derived from the digit count."""
        if self.bits is not None:
            return BitLength(self.bits)
        return digits_to_bits(self.decimal_digits)

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'bits': self.bits,
            'decimal_digits': self.decimal_digits,
            'date_factored': str(self.date_factored),
            'wall_hours': self.wall_hours,
            'mips_years': self.mips_years,
            'algorithm': self.algorithm.value,
        }
