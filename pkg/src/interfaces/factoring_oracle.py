"""Abstract base class for factoring oracles."""
from abc import ABC, abstractmethod
from typing import Optional

from src.interfaces.factoring_budget import FactoringBudget


class FactoringOracle(ABC):
    """Base class for all desk-scale factoring methods."""

    name: str = ''

    # Largest modulus size, in bits, the oracle handles interactively
    recommended_max_bits: int = 0

    @abstractmethod
    def find_factor(self, n: int, budget: Optional[FactoringBudget] = None) -> int:
        """Return a nontrivial factor of composite n (1 < f < n)."""
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
