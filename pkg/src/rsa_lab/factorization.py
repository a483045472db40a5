"""Complete factorization by repeated splitting with any oracle."""

from typing import List, Optional

from src.errors import FactoringError, InputError
from src.factoring_oracles.pollard_rho import PollardRhoOracle
from src.interfaces.factoring_budget import FactoringBudget
from src.interfaces.factoring_oracle import FactoringOracle
from src.util.primality import is_prime


def prime_factors(n: int, oracle: Optional[FactoringOracle] = None,
                  budget: Optional[FactoringBudget] = None) -> List[int]:
    """Sorted prime factors of n with multiplicity."""
    if n < 2:
        raise InputError(f"cannot factor {n}")
    oracle = oracle if oracle is not None else PollardRhoOracle()
    pending = [n]
    factors = []
    while pending:
        m = pending.pop()
        if is_prime(m):
            factors.append(m)
            continue
        f = oracle.find_factor(m, budget)
        if not 1 < f < m or m % f:
            raise FactoringError(f"{oracle!r} returned {f}, not a proper divisor of {m}")
        pending.extend((f, m // f))
    return sorted(factors)
