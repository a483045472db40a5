"""Miller-Rabin primality testing and random prime generation."""

import random
from typing import Iterable

import gmpy2

from src.errors import InputError


# Bases 2..17 decide primality for every n below this bound
DETERMINISTIC_BOUND = 341_550_071_728_321
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17)
PROBABILISTIC_ROUNDS = 40

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _strong_probable_prime(n: gmpy2.mpz, d: gmpy2.mpz, s: int, base: int) -> bool:
    x = gmpy2.powmod(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return True
    return False


def _witness_bases(n: int) -> Iterable[int]:
    if n < DETERMINISTIC_BOUND:
        return DETERMINISTIC_BASES
    # seeded by n so the verdict is reproducible
    rng = random.Random(n)
    return [rng.randrange(2, n - 1) for _ in range(PROBABILISTIC_ROUNDS)]


def is_prime(n: int) -> bool:
    """Deterministic below 3.4e14, 40 Miller-Rabin rounds above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    m = gmpy2.mpz(n)
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_strong_probable_prime(m, d, s, base) for base in _witness_bases(n))


def random_prime(bits: int, rng: random.Random) -> int:
    """Uniform-ish random prime with exactly ``bits`` binary digits."""
    if bits < 2:
        raise InputError(f"a prime needs at least 2 bits, got {bits}")
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(candidate):
            return candidate
