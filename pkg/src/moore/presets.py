"""Named doubling periods."""

import math

from src.errors import InputError
from src.moore.doubling_model import DoublingModel


# conservative default
MOORE_18_MONTHS = DoublingModel(18.0, label='moore-18')

# RSA-512 took 5,040 h in 1999 and 4 h in 2015, 192 months apart
CALIBRATED_RSA512 = DoublingModel(192.0 / math.log2(5040.0 / 4.0), label='calibrated-rsa512')

# Moore's 1975 revision to two years
MOORE_1975 = DoublingModel(24.0, label='moore-1975')

DEFAULT_MODEL = MOORE_18_MONTHS

PRESETS = {model.label: model for model in (MOORE_18_MONTHS, CALIBRATED_RSA512, MOORE_1975)}


def preset(name: str) -> DoublingModel:
    try:
        return PRESETS[name]
    except KeyError:
        raise InputError(f"unknown doubling preset {name!r}; choose from {sorted(PRESETS)}") from None
