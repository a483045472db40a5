"""Heuristic Number Field Sieve effort, L[n, 1/3, (64/9)^(1/3)].

All quantities stay in log domain; ``exp`` is only taken for presentation and
only when the result fits in a float.
"""

import math
from typing import Union

from src.effort.bit_length import BitLength
from src.effort.effort_value import EffortValue
from src.util.log_scale import LN2, exp_if_representable, ln_to_log10


NFS_EXPONENT_U = 1.0 / 3.0
NFS_CONSTANT_C = (64.0 / 9.0) ** (1.0 / 3.0)

BitsLike = Union[int, BitLength]


def l_exponent(bits: float, u: float = NFS_EXPONENT_U, c: float = NFS_CONSTANT_C) -> float:
    """Return c * (ln n)^u * (ln ln n)^(1-u) with ln n = bits * ln 2.

    Accepts a real bit count so the same shape can serve as a regression
    regressor for benchmark data.
    """
    ln_n = bits * LN2
    ln_ln_n = math.log(ln_n)
    return c * ln_n ** u * ln_ln_n ** (1.0 - u)


def l_effort(bl: BitsLike) -> EffortValue:
    """Return ln L[n] for a modulus of the given bit length."""
    bl = BitLength.of(bl)
    return EffortValue(l_exponent(bl.bits))


def ln_effort_ratio(target: BitsLike, baseline: BitsLike) -> float:
    """Natural log of how many times harder target is than baseline."""
    target = BitLength.of(target)
    baseline = BitLength.of(baseline)
    if target == baseline:
        return 0.0
    return l_effort(target).ln_effort - l_effort(baseline).ln_effort


def effort_ratio(target: BitsLike, baseline: BitsLike) -> float:
    """Return L(target) / L(baseline), or inf when it does not fit in a float.

    ``log10_effort_ratio`` is the authoritative form for such sizes.
    """
    ratio = exp_if_representable(ln_effort_ratio(target, baseline))
    return math.inf if ratio is None else ratio


def log10_effort_ratio(target: BitsLike, baseline: BitsLike) -> float:
    return ln_to_log10(ln_effort_ratio(target, baseline))


def security_bits(bl: BitsLike) -> float:
    """Return b such that L[n] = 2**b."""
    return l_effort(bl).ln_effort / LN2
