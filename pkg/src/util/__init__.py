from .log_scale import (
    LN10,
    LN2,
    exp_if_representable,
    ln_expm1,
    ln_to_log10,
    render_scientific,
)
from .primality import is_prime, random_prime


__all__ = [
    'LN10', 'LN2', 'exp_if_representable', 'is_prime', 'ln_expm1', 'ln_to_log10',
    'random_prime', 'render_scientific',
]
