"""Inverting the break-time model: key size for a lifespan, lifespan for a key size."""

import bisect
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

from src.effort.bit_length import MAX_BITS, MIN_BITS, BitLength
from src.effort.nfs_effort import BitsLike, l_effort
from src.errors import HorizonUnsatisfiableError, InputError
from src.estimator.baseline_record import DEFAULT_BASELINE, BaselineRecord
from src.estimator.break_estimate import HOURS_PER_MONTH, HOURS_PER_YEAR, BreakEstimate
from src.estimator.projection import break_time
from src.estimator.security_query import ProtectionMode, SecurityQuery
from src.moore.calendar_date import MAX_YEAR, CalendarDate
from src.moore.doubling_model import DoublingModel
from src.moore.growth import months_between
from src.moore.presets import DEFAULT_MODEL
from src.util.log_scale import LN2, ln_expm1


logger = logging.getLogger(__name__)

STANDARD_MODULUS_SIZES = (512, 768, 1024, 1536, 2048, 3072, 4096, 7680, 8192, 15360)


@dataclass(frozen=True)
class KeySizeRecommendation:
    """Minimal bit length for a query, with the estimate that justifies it."""

    bits: BitLength
    raw_bits: BitLength
    query: SecurityQuery
    evidence: BreakEstimate
    ln_attacker_work: Optional[float] = None

    def to_dict(self) -> dict:
        result = {
            'bits': self.bits.bits,
            'raw_bits': self.raw_bits.bits,
            'query': self.query.to_dict(),
            'evidence': self.evidence.to_dict(),
        }
        if self.ln_attacker_work is not None:
            result['ln_attacker_work'] = self.ln_attacker_work
        return result


@dataclass(frozen=True)
class ProtectionHorizon:
    """Latest expiry a fixed key size still satisfies."""

    bits: BitLength
    protect_from: CalendarDate
    months: int
    evidence: BreakEstimate
    capped: bool

    @property
    def years(self) -> float:
        return self.months / 12.0

    @property
    def expires(self) -> CalendarDate:
        return self.protect_from.plus_months(self.months)

    def to_dict(self) -> dict:
        return {
            'bits': self.bits.bits,
            'protect_from': str(self.protect_from),
            'months': self.months,
            'years': self.years,
            'expires': str(self.expires),
            'capped': self.capped,
            'evidence': self.evidence.to_dict(),
        }


def round_to_standard(bits: BitsLike) -> BitLength:
    """Smallest conventional modulus size >= bits; sizes past 15360 are kept."""
    bits = BitLength.of(bits)
    index = bisect.bisect_left(STANDARD_MODULUS_SIZES, bits.bits)
    if index == len(STANDARD_MODULUS_SIZES):
        logger.warning(f"{bits.bits} bits exceeds every conventional size; keeping raw value")
        return bits
    return BitLength(STANDARD_MODULUS_SIZES[index])


def _smallest_satisfying(predicate: Callable[[int], bool], low: int, high: int) -> Optional[int]:
    """Binary search for the smallest value in [low, high] where a monotone predicate holds."""
    if not predicate(high):
        return None
    while low < high:
        mid = (low + high) // 2
        if predicate(mid):
            high = mid
        else:
            low = mid + 1
    return low


def end_of_life_holds(bits: BitsLike, query: SecurityQuery, baseline: BaselineRecord,
                      model: DoublingModel) -> bool:
    """Break time at expiry is at least margin * lifespan years."""
    return break_time(bits, query.expires, baseline, model).years >= query.required_years


def ln_cumulative_work(query: SecurityQuery, baseline: BaselineRecord, model: DoublingModel) -> float:
    """ln of the total operations an attacker performs over the lifespan.

    The work rate is L(baseline.bits) / baseline.wall_hours operations per
    hour at the baseline date and doubles every model period; it is integrated
    from protect_from across lifespan_years. Returns -inf for a zero lifespan.
    """
    if query.lifespan_years == 0:
        return -math.inf
    period_hours = model.period_months * HOURS_PER_MONTH
    elapsed_to_start = months_between(baseline.date, query.protect_from)
    ln_rate = (l_effort(baseline.bits).ln_effort - math.log(baseline.wall_hours)
               + model.doublings(elapsed_to_start) * LN2)
    lifespan_hours = query.lifespan_years * HOURS_PER_YEAR
    return ln_rate + math.log(period_hours / LN2) + ln_expm1(lifespan_hours * LN2 / period_hours)


def min_bitlength(query: SecurityQuery, baseline: BaselineRecord = DEFAULT_BASELINE,
                  model: DoublingModel = DEFAULT_MODEL, round_up: bool = False,
                  cap: int = MAX_BITS) -> KeySizeRecommendation:
    """Find the smallest bit length that survives the query's lifespan.

    End-of-life mode requires break_time(B, expiry).years >= margin * lifespan.
    Cumulative-work mode requires the attacker's integrated work over the
    lifespan, times margin, to stay strictly below L(B). Both predicates are
    monotone in B, so the answer is found by binary search over [2, cap].

    Args:
        query: Protection start, lifespan, margin and mode.
        baseline: Reference factoring run.
        model: Compute-power doubling law.
        round_up: Round the answer up to a conventional modulus size.
        cap: Largest bit length considered.

    Returns:
        KeySizeRecommendation carrying the break estimate at expiry as evidence.

    Raises:
        HorizonUnsatisfiableError: If no bit length up to cap satisfies the query.
    """
    cap = BitLength.of(cap).bits
    ln_work = None
    if query.mode is ProtectionMode.END_OF_LIFE:
        def predicate(b: int) -> bool:
            return end_of_life_holds(b, query, baseline, model)
    else:
        ln_work = ln_cumulative_work(query, baseline, model)
        ln_needed = math.log(query.margin) + ln_work

        def predicate(b: int) -> bool:
            return l_effort(b).ln_effort > ln_needed

    logger.debug(f"Searching bit lengths in [{MIN_BITS}, {cap}] for {query}")
    found = _smallest_satisfying(predicate, MIN_BITS, cap)
    if found is None:
        raise HorizonUnsatisfiableError(
            f"no bit length <= {cap} protects {query.lifespan_years} years from {query.protect_from}")
    raw = BitLength(found)
    bits = round_to_standard(raw) if round_up else raw
    evidence = break_time(bits, query.expires, baseline, model)
    logger.info(f"Minimum bit length {raw.bits} (reported {bits.bits}) for {query.mode.value} query")
    return KeySizeRecommendation(bits, raw, query, evidence, ln_work)


def protection_horizon(bits: BitsLike, protect_from: CalendarDate,
                       baseline: BaselineRecord = DEFAULT_BASELINE, model: DoublingModel = DEFAULT_MODEL,
                       margin: float = 1.0) -> ProtectionHorizon:
    """Longest lifespan, in whole months, that ``bits`` protects under end-of-life rules."""
    bits = BitLength.of(bits)
    if not math.isfinite(margin) or margin <= 0:
        raise InputError(f"margin must be positive, got {margin}")
    max_months = months_between(protect_from, CalendarDate(MAX_YEAR, 12))
    if max_months < 0:
        raise InputError(f"protection start {protect_from} is past the supported range")

    def holds(months: int) -> bool:
        estimate = break_time(bits, protect_from.plus_months(months), baseline, model)
        return estimate.years >= margin * months / 12.0

    # holds() is true at 0 and monotone decreasing; search for the first failure
    first_failure = _smallest_satisfying(lambda m: not holds(m), 0, max_months)
    months = max_months if first_failure is None else first_failure - 1
    evidence = break_time(bits, protect_from.plus_months(months), baseline, model)
    return ProtectionHorizon(bits, protect_from, months, evidence, capped=first_failure is None)
