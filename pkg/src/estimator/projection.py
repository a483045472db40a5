"""Break-time projection from a baseline factoring record.

hours(B, t) = baseline.wall_hours * L(B) / L(baseline.bits) / 2**(months(baseline.date, t) / P)

The product is assembled in log domain and exponentiated once.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from src.effort.bit_length import BitLength
from src.effort.nfs_effort import BitsLike, ln_effort_ratio
from src.errors import InputError
from src.estimator.baseline_record import DEFAULT_BASELINE, BaselineRecord
from src.estimator.break_estimate import BreakEstimate
from src.moore.calendar_date import CalendarDate
from src.moore.doubling_model import DoublingModel
from src.moore.growth import log2_scale_factor, months_between
from src.moore.presets import DEFAULT_MODEL
from src.util.log_scale import LN2, exp_if_representable


TABLE_BITS = (512, 768, 1024, 2048)

# Observed wall hours printed next to the projections
OBSERVED_HOURS = {512: 4.0, 768: 21600.0}


def break_time_after(target: BitsLike, elapsed_months: float, baseline: BaselineRecord,
                     model: DoublingModel, at_date: CalendarDate) -> BreakEstimate:
    """Estimate for ``target`` bits ``elapsed_months`` after the baseline date."""
    target = BitLength.of(target)
    ln_multiplier = (ln_effort_ratio(target, baseline.bits)
                     - log2_scale_factor(model, elapsed_months) * LN2)
    multiplier = exp_if_representable(ln_multiplier)
    hours = baseline.wall_hours * multiplier if multiplier is not None else math.inf
    return BreakEstimate(target, at_date, hours, math.log(baseline.wall_hours) + ln_multiplier)


def break_time(target: BitsLike, at: CalendarDate, baseline: BaselineRecord = DEFAULT_BASELINE,
               model: DoublingModel = DEFAULT_MODEL) -> BreakEstimate:
    """Project the wall-clock time to factor ``target`` bits at date ``at``.

    Args:
        target: Bit length of the modulus to break.
        at: Date at which the attack runs.
        baseline: Reference factoring run (default RSA-512, 4 h, 2015).
        model: Compute-power doubling law (default 18 months).

    Returns:
        BreakEstimate for the target at the given date.
    """
    return break_time_after(target, months_between(baseline.date, at), baseline, model, at)


def table6_estimates(baseline: BaselineRecord = DEFAULT_BASELINE, model: DoublingModel = DEFAULT_MODEL,
                     bits: Iterable[int] = TABLE_BITS,
                     observed: Optional[Dict[int, float]] = None) -> List[dict]:
    """Projections at the baseline date next to the observed hours, if any."""
    observed = OBSERVED_HOURS if observed is None else observed
    rows = []
    for b in bits:
        estimate = break_time(b, baseline.date, baseline, model)
        rows.append({
            'name': f"RSA-{b}",
            'bits': b,
            'time_taken_hours': observed.get(b),
            'estimate': estimate,
        })
    return rows


def table8_estimates(baseline_minutes: float, bits: Iterable[int] = TABLE_BITS,
                     baseline_bits: int = 512, at: CalendarDate = DEFAULT_BASELINE.date) -> List[BreakEstimate]:
    """Scale a hypothetical baseline duration (in minutes) by effort ratios alone."""
    if not math.isfinite(baseline_minutes) or baseline_minutes <= 0:
        raise InputError(f"baseline_minutes must be positive, got {baseline_minutes}")
    baseline = BaselineRecord(BitLength(baseline_bits), baseline_minutes / 60.0, at)
    return [break_time(b, at, baseline, DEFAULT_MODEL) for b in bits]


def overestimation_vs_observed(bits: int = 768, observed_hours: float = 21600.0,
                               baseline: BaselineRecord = DEFAULT_BASELINE,
                               model: DoublingModel = DEFAULT_MODEL) -> float:
    """Projected hours at the baseline date divided by an observed run's hours."""
    if observed_hours <= 0:
        raise InputError(f"observed_hours must be positive, got {observed_hours}")
    return break_time(bits, baseline.date, baseline, model).hours / observed_hours
