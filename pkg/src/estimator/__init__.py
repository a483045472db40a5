from .baseline_record import BaselineRecord, DEFAULT_BASELINE
from .break_estimate import BreakEstimate, HOURS_PER_MONTH, HOURS_PER_YEAR
from .key_size_search import (
    KeySizeRecommendation,
    ProtectionHorizon,
    STANDARD_MODULUS_SIZES,
    end_of_life_holds,
    ln_cumulative_work,
    min_bitlength,
    protection_horizon,
    round_to_standard,
)
from .policy import POLICY_CUTOFF_YEAR, policy_recommendation
from .projection import (
    OBSERVED_HOURS,
    TABLE_BITS,
    break_time,
    break_time_after,
    overestimation_vs_observed,
    table6_estimates,
    table8_estimates,
)
from .security_levels import (
    CryptoFamily,
    KEY_SIZES,
    SECURITY_LEVELS,
    security_level_for,
    security_level_lookup,
    table1_rows,
)
from .security_query import ProtectionMode, SecurityQuery


__all__ = [
    'BaselineRecord', 'BreakEstimate', 'CryptoFamily', 'DEFAULT_BASELINE', 'HOURS_PER_MONTH',
    'HOURS_PER_YEAR', 'KEY_SIZES', 'KeySizeRecommendation', 'OBSERVED_HOURS', 'POLICY_CUTOFF_YEAR',
    'ProtectionHorizon', 'ProtectionMode', 'SECURITY_LEVELS', 'STANDARD_MODULUS_SIZES',
    'SecurityQuery', 'TABLE_BITS', 'break_time', 'break_time_after', 'end_of_life_holds',
    'ln_cumulative_work', 'min_bitlength', 'overestimation_vs_observed', 'policy_recommendation',
    'protection_horizon', 'round_to_standard', 'security_level_for', 'security_level_lookup',
    'table1_rows', 'table6_estimates', 'table8_estimates',
]
