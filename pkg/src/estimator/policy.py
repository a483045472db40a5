"""National-agency minimum modulus rule for factoring-based systems."""

from src.effort.bit_length import BitLength
from src.moore.calendar_date import CalendarDate


POLICY_CUTOFF_YEAR = 2030


def policy_recommendation(use_until_year: int) -> BitLength:
    """2048 bits for use not beyond 2030 (inclusive), 3072 bits after."""
    CalendarDate(use_until_year)  # range check only
    return BitLength(2048 if use_until_year <= POLICY_CUTOFF_YEAR else 3072)
