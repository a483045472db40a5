"""Exception hierarchy for the keylength toolkit.

Every domain failure raised by the library derives from KeylengthError so the
command-line surface can map it to exit code 1 in one place.
"""

from typing import Optional


class KeylengthError(Exception):
    """Base class for all toolkit errors."""


class InputError(KeylengthError, ValueError):
    """An argument is outside its valid domain."""


class ConfigError(KeylengthError):
    """The JSON configuration file is malformed or holds unknown keys."""


class CalibrationError(KeylengthError):
    """Doubling-period calibration is impossible for the given timings."""


class HorizonUnsatisfiableError(KeylengthError):
    """No bit length up to the search cap satisfies a security query."""


class FitError(KeylengthError):
    """Not enough usable data points for a regression."""


class RecordParseError(KeylengthError):
    """A row of a record file could not be parsed."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class RecordValidationError(KeylengthError):
    """A parsed record violates a record invariant."""

    def __init__(self, message: str, record_name: Optional[str] = None):
        prefix = f"record {record_name!r}: " if record_name else ""
        super().__init__(f"{prefix}{message}")
        self.record_name = record_name


class DuplicateRecordError(RecordValidationError):
    """Two records share the same (name, date) pair."""


class FactoringError(KeylengthError):
    """A factoring oracle could not produce a nontrivial factor."""


class BudgetExceededError(FactoringError):
    """A factoring oracle ran out of its step or time budget."""

    def __init__(self, message: str, steps: int = 0):
        super().__init__(message)
        self.steps = steps


class BreakError(KeylengthError):
    """Private-key recovery from a public key failed."""
