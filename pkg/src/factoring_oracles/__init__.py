from .fermat import FermatOracle, fermat_factor
from .pollard_rho import DEFAULT_MAX_RESTARTS, PollardRhoOracle, pollard_rho
from .trial_division import TrialDivisionOracle, trial_division
from .registry import ORACLE_NAMES, make_oracle


__all__ = [
    'DEFAULT_MAX_RESTARTS', 'FermatOracle', 'ORACLE_NAMES', 'PollardRhoOracle',
    'TrialDivisionOracle', 'fermat_factor', 'make_oracle', 'pollard_rho', 'trial_division',
]
