from .bit_length import BitLength, MAX_BITS, MIN_BITS
from .effort_value import EffortValue
from .nfs_effort import (
    NFS_CONSTANT_C,
    NFS_EXPONENT_U,
    effort_ratio,
    l_effort,
    l_exponent,
    ln_effort_ratio,
    log10_effort_ratio,
    security_bits,
)


__all__ = [
    'BitLength', 'EffortValue', 'MAX_BITS', 'MIN_BITS', 'NFS_CONSTANT_C', 'NFS_EXPONENT_U',
    'effort_ratio', 'l_effort', 'l_exponent', 'ln_effort_ratio', 'log10_effort_ratio',
    'security_bits',
]
