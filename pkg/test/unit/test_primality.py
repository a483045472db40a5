import random

import pytest

from src.errors import InputError
from src.util.primality import DETERMINISTIC_BOUND, is_prime, random_prime


def sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = [False] * len(flags[i * i::i])
    return flags


def test_matches_sieve_below_twenty_thousand():
    flags = sieve(20_000)
    assert [n for n in range(20_001) if is_prime(n)] == [n for n, prime in enumerate(flags) if prime]


@pytest.mark.parametrize('n', [561, 1105, 1729, 2465, 2821, 6601, 8911])
def test_carmichael_numbers_are_composite(n):
    assert not is_prime(n)


@pytest.mark.parametrize('n', [2 ** 31 - 1, 2 ** 61 - 1, 2 ** 89 - 1, 2 ** 127 - 1])
def test_mersenne_primes(n):
    assert is_prime(n)


def test_strong_pseudoprime_at_the_deterministic_bound():
    # composite and a strong pseudoprime to every base 2..17
    assert not is_prime(DETERMINISTIC_BOUND)


def test_large_composites():
    assert not is_prime(2 ** 64 + 1)
    assert not is_prime((2 ** 61 - 1) * (2 ** 31 - 1))


def test_random_prime_has_exact_size():
    rng = random.Random(7)
    for bits in (2, 3, 8, 16, 33, 64):
        p = random_prime(bits, rng)
        assert p.bit_length() == bits
        assert is_prime(p)


def test_random_prime_is_deterministic():
    assert random_prime(40, random.Random(3)) == random_prime(40, random.Random(3))


def test_random_prime_rejects_one_bit():
    with pytest.raises(InputError):
        random_prime(1, random.Random(0))
