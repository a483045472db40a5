"""Textbook RSA on residues of Z_n: C = M^e mod n, M = C^d mod n."""

import logging
import math
import random
from typing import Tuple, Union

import gmpy2

from src.errors import InputError
from src.rsa_lab.rsa_key_pair import PublicKey, RsaKeyPair
from src.util.primality import random_prime


logger = logging.getLogger(__name__)

MIN_KEY_BITS = 8
MAX_KEY_BITS = 256
DEFAULT_PUBLIC_EXPONENT = 65537


def choose_public_exponent(phi: int) -> int:
    """65537 when it is below and coprime to phi, else the smallest odd coprime e >= 3."""
    if DEFAULT_PUBLIC_EXPONENT < phi and math.gcd(DEFAULT_PUBLIC_EXPONENT, phi) == 1:
        return DEFAULT_PUBLIC_EXPONENT
    e = 3
    while math.gcd(e, phi) != 1:
        e += 2
    return e


def generate_distinct_primes(bits: int, rng: random.Random) -> Tuple[int, int]:
    """Primes of ceil(bits/2) and floor(bits/2) bits, so p * q has bits or bits - 1 digits."""
    p = random_prime((bits + 1) // 2, rng)
    while True:
        q = random_prime(bits // 2, rng)
        if q != p:
            return p, q


def keygen(bits: int, seed: int = 0) -> RsaKeyPair:
    """Deterministic desk-scale key generation.

    Args:
        bits: Modulus size, 8 to 256 bits.
        seed: Seed of the prime search.

    Returns:
        RsaKeyPair with d = e^-1 mod (p - 1)(q - 1).
    """
    if isinstance(bits, bool) or not isinstance(bits, int) or not MIN_KEY_BITS <= bits <= MAX_KEY_BITS:
        raise InputError(f"key size must be in [{MIN_KEY_BITS}, {MAX_KEY_BITS}] bits, got {bits!r}")
    rng = random.Random(seed)
    p, q = generate_distinct_primes(bits, rng)
    phi = (p - 1) * (q - 1)
    e = choose_public_exponent(phi)
    d = int(gmpy2.invert(e, phi))
    logger.debug(f"Generated {bits}-bit key with e={e} from seed {seed}")
    return RsaKeyPair(n=p * q, e=e, d=d, p=p, q=q)


def _check_residue(value: int, n: int, label: str) -> None:
    if not 0 <= value < n:
        raise InputError(f"{label} {value} is not in Z_n for n = {n}")


def encrypt(k_pub: Union[PublicKey, Tuple[int, int]], m: int) -> int:
    n, e = k_pub
    _check_residue(m, n, 'message')
    return int(gmpy2.powmod(m, e, n))


def decrypt(d: int, n: int, c: int) -> int:
    _check_residue(c, n, 'ciphertext')
    return int(gmpy2.powmod(c, d, n))
