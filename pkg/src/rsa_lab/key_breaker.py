"""Private-key recovery by factoring the modulus.

1. factor n = p * q
2. phi(n) = (p - 1)(q - 1)
3. d = e^-1 mod phi(n), after which M = C^d mod n
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import gmpy2

from src.errors import BreakError, FactoringError
from src.factoring_oracles.pollard_rho import pollard_rho
from src.interfaces.factoring_budget import FactoringBudget
from src.rsa_lab.rsa_cipher import decrypt
from src.rsa_lab.rsa_key_pair import PublicKey
from src.util.primality import is_prime


logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 50_000_000


@dataclass(frozen=True)
class RecoveredKey:
    d: int
    p: int
    q: int

    @property
    def phi(self) -> int:
        return (self.p - 1) * (self.q - 1)

    def to_dict(self) -> dict:
        return {'d': str(self.d), 'p': str(self.p), 'q': str(self.q), 'phi': str(self.phi)}


def break_key(k_pub: Union[PublicKey, Tuple[int, int]], budget: Optional[FactoringBudget] = None,
              seed: int = 0) -> RecoveredKey:
    """Recover d from (n, e) for a desk-scale semiprime modulus.

    Raises:
        BreakError: n is prime or not a semiprime, e is not invertible modulo
            phi(n), or the factoring budget ran out.
    """
    n, e = k_pub
    if n < 4 or is_prime(n):
        raise BreakError(f"modulus {n} is prime; nothing to factor")
    budget = budget if budget is not None else FactoringBudget(max_steps=DEFAULT_MAX_STEPS)
    try:
        f = pollard_rho(n, seed=seed, budget=budget)
    except FactoringError as e_:
        raise BreakError(f"could not factor {n}: {e_}") from e_
    p, q = sorted((f, n // f))
    if p == q or not (is_prime(p) and is_prime(q)):
        raise BreakError(f"modulus {n} is not a product of two distinct primes")
    phi = (p - 1) * (q - 1)
    if math.gcd(e, phi) != 1:
        raise BreakError(f"e = {e} is not invertible modulo phi(n)")
    d = int(gmpy2.invert(e, phi))
    logger.info(f"Recovered private exponent for {n.bit_length()}-bit modulus after {budget.steps} steps")
    return RecoveredKey(d, p, q)


def attack_ciphertext(k_pub: Union[PublicKey, Tuple[int, int]], c: int,
                      budget: Optional[FactoringBudget] = None, seed: int = 0) -> int:
    """Recover the plaintext of c using only the public key."""
    n, _ = k_pub
    recovered = break_key(k_pub, budget, seed)
    return decrypt(recovered.d, n, c)
