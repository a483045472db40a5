"""Month-resolution calendar dates."""

import re
from dataclasses import dataclass

from src.errors import InputError


MIN_YEAR = 1900
MAX_YEAR = 2500

_DATE_PATTERN = re.compile(r'^\s*(\d{4})(?:-(\d{1,2}))?\s*$')


@dataclass(frozen=True, order=True)
class CalendarDate:
    """A (year, month) pair; the toolkit never needs day resolution."""

    year: int
    month: int = 1

    def __post_init__(self):
        if not MIN_YEAR <= self.year <= MAX_YEAR:
            raise InputError(f"year {self.year} outside [{MIN_YEAR}, {MAX_YEAR}]")
        if not 1 <= self.month <= 12:
            raise InputError(f"month {self.month} outside [1, 12]")

    @classmethod
    def parse(cls, text: str) -> 'CalendarDate':
        """Parse ``YYYY`` or ``YYYY-MM``; a bare year means month 1."""
        match = _DATE_PATTERN.match(text or '')
        if match is None:
            raise InputError(f"date {text!r} is not YYYY or YYYY-MM")
        year = int(match.group(1))
        month = int(match.group(2)) if match.group(2) else 1
        return cls(year, month)

    def plus_months(self, months: int) -> 'CalendarDate':
        index = self.year * 12 + (self.month - 1) + int(months)
        return CalendarDate(index // 12, index % 12 + 1)

    @property
    def decimal_year(self) -> float:
        """Start of the month as a year fraction (2015-01 -> 2015.0)."""
        return self.year + (self.month - 1) / 12.0

    @property
    def midpoint_year(self) -> float:
        """Centre of the month as a year fraction, used for regressions."""
        return self.year + (self.month - 0.5) / 12.0

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"
