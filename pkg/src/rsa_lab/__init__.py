from .rsa_key_pair import PublicKey, RsaKeyPair
from .rsa_cipher import (
    DEFAULT_PUBLIC_EXPONENT,
    MAX_KEY_BITS,
    MIN_KEY_BITS,
    choose_public_exponent,
    decrypt,
    encrypt,
    generate_distinct_primes,
    keygen,
)
from .factorization import prime_factors
from .key_breaker import DEFAULT_MAX_STEPS, RecoveredKey, attack_ciphertext, break_key
from .benchmark import (
    BenchmarkReport,
    FactoringBenchmark,
    GrowthFit,
    benchmark_factoring,
    fit_growth,
    make_semiprime,
    median_seconds,
)
from src.util.primality import is_prime, random_prime


__all__ = [
    'BenchmarkReport', 'DEFAULT_MAX_STEPS', 'DEFAULT_PUBLIC_EXPONENT', 'FactoringBenchmark', 'GrowthFit',
    'MAX_KEY_BITS', 'MIN_KEY_BITS', 'PublicKey', 'RecoveredKey', 'RsaKeyPair', 'attack_ciphertext',
    'benchmark_factoring', 'break_key', 'choose_public_exponent', 'decrypt', 'encrypt', 'fit_growth',
    'generate_distinct_primes', 'is_prime', 'keygen', 'make_semiprime', 'median_seconds', 'prime_factors',
    'random_prime',
]
