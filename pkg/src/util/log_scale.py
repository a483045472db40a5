"""Helpers for values carried in natural-log scale."""

import math
import sys
from typing import Optional


LN10 = math.log(10.0)
LN2 = math.log(2.0)

# Largest natural log whose exponential is still a finite float.
_MAX_LN_FLOAT = math.log(sys.float_info.max)


def ln_to_log10(ln_value: float) -> float:
    return ln_value / LN10


def exp_if_representable(ln_value: float) -> Optional[float]:
    """Return exp(ln_value), or None when the result would overflow a float."""
    if ln_value > _MAX_LN_FLOAT:
        return None
    return math.exp(ln_value)


def render_scientific(ln_value: float, digits: int = 9) -> str:
    """Render exp(ln_value) as scientific notation without leaving log space.

    The exponent is the integer part of ln_value / ln 10 and the mantissa is
    10 raised to the fractional part, so values far beyond the float range
    still print (L at a million bits is about 1E+418).

    Args:
        ln_value: Natural logarithm of the value to print.
        digits: Significant digits of the mantissa (at least 1).

    Returns:
        The formatted string using '.' as decimal separator.
    """
    if not math.isfinite(ln_value):
        raise ValueError(f"cannot render non-finite log value {ln_value}")
    digits = max(1, digits)
    log10_value = ln_value / LN10
    exponent = math.floor(log10_value)
    mantissa = 10.0 ** (log10_value - exponent)
    rounded = round(mantissa, digits - 1)
    if rounded >= 10.0:
        rounded /= 10.0
        exponent += 1
    sign = '+' if exponent >= 0 else '-'
    return f"{rounded:.{digits - 1}f}E{sign}{abs(exponent):02d}"


def ln_expm1(x: float) -> float:
    """Return ln(e**x - 1) for x > 0 without overflowing for large x."""
    if x <= 0:
        raise ValueError("ln_expm1 requires x > 0")
    if x < 1.0:
        return math.log(math.expm1(x))
    return x + math.log(-math.expm1(-x))
