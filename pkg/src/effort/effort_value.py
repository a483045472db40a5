"""Factoring effort carried in natural-log scale."""

import math
from dataclasses import dataclass
from typing import Optional

from src.errors import InputError
from src.util.log_scale import LN2, exp_if_representable, ln_to_log10, render_scientific


@dataclass(frozen=True, order=True)
class EffortValue:
    """ln of an operation count. Linear values are presentation only."""

    ln_effort: float

    def __post_init__(self):
        if not math.isfinite(self.ln_effort):
            raise InputError(f"effort must be finite, got {self.ln_effort}")

    @property
    def log10(self) -> float:
        return ln_to_log10(self.ln_effort)

    @property
    def log2(self) -> float:
        return self.ln_effort / LN2

    def linear(self) -> Optional[float]:
        """Linear effort, or None if it does not fit in a float."""
        return exp_if_representable(self.ln_effort)

    def scientific(self, digits: int = 9) -> str:
        return render_scientific(self.ln_effort, digits)

    def to_dict(self) -> dict:
        return {
            'ln_effort': self.ln_effort,
            'log10_effort': self.log10,
            'effort': self.scientific(),
        }
