"""Key sizes per security level and cryptosystem family (lookup data only)."""

import enum
from typing import Dict, List, Optional

from src.effort.bit_length import BitLength
from src.errors import InputError


class CryptoFamily(enum.Enum):
    RSA = 'RSA'
    DISCRETE_LOG = 'DH/DSA/Elgamal'
    ECC = 'ECC'
    SYMMETRIC = 'symmetric'

    @classmethod
    def parse(cls, value) -> 'CryptoFamily':
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        family = _ALIASES.get(key)
        if family is None:
            raise InputError(f"unknown cryptosystem family {value!r}")
        return family


_ALIASES = {
    'rsa': CryptoFamily.RSA,
    'if': CryptoFamily.RSA,
    'dh/dsa/elgamal': CryptoFamily.DISCRETE_LOG,
    'dh': CryptoFamily.DISCRETE_LOG,
    'dsa': CryptoFamily.DISCRETE_LOG,
    'elgamal': CryptoFamily.DISCRETE_LOG,
    'dl': CryptoFamily.DISCRETE_LOG,
    'ecc': CryptoFamily.ECC,
    'ecdh': CryptoFamily.ECC,
    'ecdsa': CryptoFamily.ECC,
    'symmetric': CryptoFamily.SYMMETRIC,
    'aes': CryptoFamily.SYMMETRIC,
    '3des': CryptoFamily.SYMMETRIC,
}

SECURITY_LEVELS = (80, 128, 192, 256)

KEY_SIZES: Dict[CryptoFamily, Dict[int, int]] = {
    CryptoFamily.RSA: {80: 1024, 128: 3072, 192: 7680, 256: 15360},
    CryptoFamily.DISCRETE_LOG: {80: 1024, 128: 3072, 192: 7680, 256: 15360},
    CryptoFamily.ECC: {80: 160, 128: 256, 192: 384, 256: 512},
    CryptoFamily.SYMMETRIC: {80: 80, 128: 128, 192: 192, 256: 256},
}


def security_level_lookup(family, level_bits: int) -> BitLength:
    """Key size required by ``family`` for a security level of ``level_bits``."""
    family = CryptoFamily.parse(family)
    if level_bits not in SECURITY_LEVELS:
        raise InputError(f"unknown security level {level_bits}; choose from {SECURITY_LEVELS}")
    return BitLength(KEY_SIZES[family][level_bits])


def security_level_for(family, key_bits: int) -> Optional[int]:
    """Highest level whose required size ``key_bits`` meets, or None below 80."""
    family = CryptoFamily.parse(family)
    if isinstance(key_bits, BitLength):
        key_bits = key_bits.bits
    met = [level for level, size in KEY_SIZES[family].items() if key_bits >= size]
    return max(met) if met else None


def table1_rows() -> List[dict]:
    return [
        {'family': family.value, **{str(level): KEY_SIZES[family][level] for level in SECURITY_LEVELS}}
        for family in CryptoFamily
    ]
