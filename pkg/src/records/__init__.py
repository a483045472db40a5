from .analysis import (
    extrapolate_effort,
    extrapolation_report,
    find_record,
    ln_extrapolate_effort,
    mpqs_to_nfs_improvement,
    table2_rows,
    table3_ratios,
    table3_rows,
)
from .factoring_record import Algorithm, DIGITS_BITS_TOLERANCE, FactoringRecord, digits_to_bits
from .record_loader import (
    BUNDLED_ANNOTATIONS,
    BUNDLED_RECORDS,
    ExtrapolationAnnotation,
    RECORD_HEADER,
    load_bundled_records,
    load_extrapolation_annotations,
    load_records,
    load_records_file,
    serialize_records,
)
from .trend_fit import TrendFit, fit_trend, fit_trend_points


__all__ = [
    'Algorithm', 'BUNDLED_ANNOTATIONS', 'BUNDLED_RECORDS', 'DIGITS_BITS_TOLERANCE',
    'ExtrapolationAnnotation', 'FactoringRecord', 'RECORD_HEADER', 'TrendFit', 'digits_to_bits',
    'extrapolate_effort', 'extrapolation_report', 'find_record', 'fit_trend', 'fit_trend_points',
    'ln_extrapolate_effort', 'load_bundled_records', 'load_extrapolation_annotations', 'load_records',
    'load_records_file', 'mpqs_to_nfs_improvement', 'serialize_records', 'table2_rows', 'table3_ratios',
    'table3_rows',
]
