"""Fermat's difference-of-squares factoring."""

from typing import Optional

import gmpy2

from src.errors import FactoringError, InputError
from src.interfaces.factoring_budget import FactoringBudget
from src.interfaces.factoring_oracle import FactoringOracle
from src.util.primality import is_prime


_CHARGE_EVERY = 1024


def fermat_factor(n: int, budget: Optional[FactoringBudget] = None) -> int:
    """Return a nontrivial factor of composite n, fastest when factors are close.

    Raises:
        FactoringError: n is prime (only the trivial split n = n * 1 exists).
    """
    if n < 4:
        raise InputError(f"Fermat factoring needs n >= 4, got {n}")
    if n % 2 == 0:
        return 2
    if is_prime(n):
        raise FactoringError(f"{n} is prime; no nontrivial factor")
    m = gmpy2.mpz(n)
    a = gmpy2.isqrt(m)
    if a * a == m:
        return int(a)
    a += 1
    b2 = a * a - m
    pending = 0
    # a = (n + 1) / 2 gives the trivial split; stop there
    last = (m + 1) // 2
    while a <= last:
        if gmpy2.is_square(b2):
            factor = a - gmpy2.isqrt(b2)
            if 1 < factor < m:
                return int(factor)
            break
        b2 += 2 * a + 1
        a += 1
        pending += 1
        if budget is not None and pending >= _CHARGE_EVERY:
            budget.charge(pending)
            pending = 0
    raise FactoringError(f"{n} is prime; no nontrivial factor")


class FermatOracle(FactoringOracle):
    name = 'fermat'
    recommended_max_bits = 40

    def find_factor(self, n: int, budget: Optional[FactoringBudget] = None) -> int:
        return fermat_factor(n, budget)
