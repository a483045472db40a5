"""Factoring by trying prime candidates in succession."""

from typing import Optional

import gmpy2

from src.errors import FactoringError, InputError
from src.interfaces.factoring_budget import FactoringBudget
from src.interfaces.factoring_oracle import FactoringOracle


# Candidates tested between budget charges
_CHARGE_EVERY = 1024


def trial_division(n: int, budget: Optional[FactoringBudget] = None) -> int:
    """Return the smallest prime factor of n (n itself when n is prime)."""
    if n < 2:
        raise InputError(f"trial division needs n >= 2, got {n}")
    for p in (2, 3):
        if n % p == 0:
            return p
    limit = int(gmpy2.isqrt(n))
    candidate = 5
    pending = 0
    # 6k - 1 and 6k + 1 wheel
    while candidate <= limit:
        if n % candidate == 0:
            return candidate
        if n % (candidate + 2) == 0:
            return candidate + 2
        candidate += 6
        pending += 2
        if budget is not None and pending >= _CHARGE_EVERY:
            budget.charge(pending)
            pending = 0
    if budget is not None and pending:
        budget.charge(pending)
    return n


class TrialDivisionOracle(FactoringOracle):
    """Smallest-prime-factor search; exact but exponential in the bit length."""

    name = 'trial_division'
    recommended_max_bits = 56

    def find_factor(self, n: int, budget: Optional[FactoringBudget] = None) -> int:
        factor = trial_division(n, budget)
        if factor == n:
            raise FactoringError(f"{n} is prime; no nontrivial factor")
        return factor
