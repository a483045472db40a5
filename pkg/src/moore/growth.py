"""Doubling-law arithmetic: scale factors, calibration and projection."""

import logging
import math
import sys

from src.errors import CalibrationError, InputError
from src.moore.calendar_date import CalendarDate
from src.moore.doubling_model import DoublingModel
from src.util.log_scale import LN2, exp_if_representable


logger = logging.getLogger(__name__)

# 2.0 ** x overflows from here on.
_MAX_DOUBLINGS = float(sys.float_info.max_exp)
# Projections below the float range saturate here; ln_project_hours stays exact.
_SMALLEST_HOURS = math.ulp(0.0)


def months_between(a: CalendarDate, b: CalendarDate) -> int:
    """Signed month count from a to b."""
    return (b.year - a.year) * 12 + (b.month - a.month)


def log2_scale_factor(model: DoublingModel, elapsed_months: float) -> float:
    """Number of doublings in elapsed_months; authoritative for huge spans."""
    return model.doublings(elapsed_months)


def scale_factor(model: DoublingModel, elapsed_months: float) -> float:
    """Return 2 ** (elapsed_months / period_months).

    Spans beyond the float range give inf (or 0.0 going backwards); use
    ``log2_scale_factor`` for those.
    """
    doublings = log2_scale_factor(model, elapsed_months)
    if doublings >= _MAX_DOUBLINGS:
        return math.inf
    return 2.0 ** doublings


def calibrate_doubling(hours_early: float, hours_late: float, elapsed_months: float) -> DoublingModel:
    """Derive the doubling period that explains a speedup between two runs.

    Args:
        hours_early: Wall hours of the earlier factoring.
        hours_late: Wall hours of the later factoring of the same size.
        elapsed_months: Months between the two runs.

    Returns:
        DoublingModel with period elapsed_months / log2(hours_early / hours_late).

    Raises:
        InputError: If any argument is not strictly positive.
        CalibrationError: If the later run was not faster.
    """
    for name, value in (('hours_early', hours_early), ('hours_late', hours_late),
                        ('elapsed_months', elapsed_months)):
        if not math.isfinite(value) or value <= 0:
            raise InputError(f"{name} must be positive, got {value}")
    if hours_late >= hours_early:
        raise CalibrationError(
            f"no speedup observed ({hours_early} h -> {hours_late} h)")
    period = elapsed_months / math.log2(hours_early / hours_late)
    logger.info(f"Calibrated doubling period: {period:.6f} months "
                f"({hours_early} h -> {hours_late} h over {elapsed_months} months)")
    return DoublingModel(period, label='calibrated')


def ln_project_hours(ln_hours_at_ref: float, model: DoublingModel, elapsed_months: float) -> float:
    return ln_hours_at_ref - log2_scale_factor(model, elapsed_months) * LN2


def project_hours(hours_at_ref: float, model: DoublingModel, elapsed_months: float) -> float:
    """Hours needed after elapsed_months of compute growth.

    The result is always positive: it saturates at the smallest positive float
    when growth outruns the float range, and at inf when projecting far back.
    """
    if not math.isfinite(hours_at_ref) or hours_at_ref <= 0:
        raise InputError(f"hours must be positive, got {hours_at_ref}")
    if elapsed_months == 0:
        return hours_at_ref
    doublings = log2_scale_factor(model, elapsed_months)
    if abs(doublings) < _MAX_DOUBLINGS - 2:
        hours = hours_at_ref / 2.0 ** doublings
    else:
        hours = exp_if_representable(ln_project_hours(math.log(hours_at_ref), model, elapsed_months))
        if hours is None:
            return math.inf
    return hours if hours > 0.0 else _SMALLEST_HOURS
