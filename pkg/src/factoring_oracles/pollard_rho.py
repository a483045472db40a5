"""Pollard's rho factoring with Brent's cycle detection and batched gcds."""

import logging
import random
from typing import Optional

import gmpy2

from src.errors import FactoringError, InputError
from src.factoring_oracles.trial_division import trial_division
from src.interfaces.factoring_budget import FactoringBudget
from src.interfaces.factoring_oracle import FactoringOracle
from src.util.primality import is_prime


logger = logging.getLogger(__name__)

DEFAULT_MAX_RESTARTS = 8

# Differences multiplied together before each gcd
_BATCH = 128


def _rho_attempt(n: gmpy2.mpz, y: gmpy2.mpz, c: gmpy2.mpz, budget: FactoringBudget) -> gmpy2.mpz:
    """One Brent walk of x -> x^2 + c; returns a divisor of n (possibly n)."""
    g = r = q = gmpy2.mpz(1)
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        budget.charge(int(r))
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(_BATCH, r - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gmpy2.gcd(q, n)
            k += steps
            budget.charge(int(steps))
        r *= 2
    if g == n:
        # the batch overshot; replay it one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = gmpy2.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def pollard_rho(n: int, seed: int = 0, budget: Optional[FactoringBudget] = None,
                max_restarts: int = DEFAULT_MAX_RESTARTS) -> int:
    """Return a nontrivial factor of composite n.

    Each attempt draws a start value and polynomial increment from a
    random.Random seeded with ``seed``, so results are reproducible. After
    ``max_restarts`` failed walks the search falls back to trial division.

    Args:
        n: Composite integer >= 4.
        seed: Seed of the walk parameters.
        budget: Optional step/time budget; BudgetExceededError once spent.
        max_restarts: Walks attempted before falling back.

    Returns:
        f with 1 < f < n and n % f == 0.

    Raises:
        FactoringError: n is prime.
    """
    if n < 4:
        raise InputError(f"Pollard rho needs n >= 4, got {n}")
    if n % 2 == 0:
        return 2
    if is_prime(n):
        raise FactoringError(f"{n} is prime; no nontrivial factor")
    budget = budget if budget is not None else FactoringBudget()
    rng = random.Random(seed)
    m = gmpy2.mpz(n)
    for attempt in range(max_restarts):
        y = gmpy2.mpz(rng.randrange(1, n))
        c = gmpy2.mpz(rng.randrange(1, n - 1))
        g = _rho_attempt(m, y, c, budget)
        if 1 < g < m:
            return int(g)
        logger.debug(f"rho walk {attempt} on {n} hit a full cycle; restarting")
    logger.debug(f"rho gave up on {n} after {max_restarts} walks; falling back to trial division")
    return trial_division(n, budget)


class PollardRhoOracle(FactoringOracle):
    """Expected work about sqrt(p) for the smallest prime factor p."""

    name = 'pollard_rho'
    recommended_max_bits = 128

    def __init__(self, seed: int = 0, max_restarts: int = DEFAULT_MAX_RESTARTS):
        self.seed = seed
        self.max_restarts = max_restarts

    def find_factor(self, n: int, budget: Optional[FactoringBudget] = None) -> int:
        return pollard_rho(n, self.seed, budget, self.max_restarts)

    def __repr__(self) -> str:
        return f"PollardRhoOracle(seed={self.seed}, max_restarts={self.max_restarts})"
