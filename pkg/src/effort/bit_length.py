"""Bit length of an RSA modulus."""

from dataclasses import dataclass

from src.errors import InputError
from src.util.log_scale import LN2


MIN_BITS = 2
MAX_BITS = 1_000_000


@dataclass(frozen=True, order=True)
class BitLength:
    """Count of binary digits of a modulus, 2 <= bits <= 1,000,000."""

    bits: int

    def __post_init__(self):
        if isinstance(self.bits, bool) or not isinstance(self.bits, int):
            raise InputError(f"bit length must be an integer, got {self.bits!r}")
        if not MIN_BITS <= self.bits <= MAX_BITS:
            raise InputError(f"bit length {self.bits} outside [{MIN_BITS}, {MAX_BITS}]")

    @classmethod
    def of(cls, value) -> 'BitLength':
        """Coerce an int or an existing BitLength."""
        if isinstance(value, BitLength):
            return value
        return cls(value)

    @property
    def ln_modulus(self) -> float:
        # n is modelled as exactly 2**bits
        return self.bits * LN2

    def __int__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return str(self.bits)
