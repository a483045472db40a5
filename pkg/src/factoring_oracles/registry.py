from src.errors import InputError
from src.factoring_oracles.fermat import FermatOracle
from src.factoring_oracles.pollard_rho import PollardRhoOracle
from src.factoring_oracles.trial_division import TrialDivisionOracle
from src.interfaces.factoring_oracle import FactoringOracle


ORACLE_NAMES = (TrialDivisionOracle.name, FermatOracle.name, PollardRhoOracle.name)


def make_oracle(name: str, seed: int = 0) -> FactoringOracle:
    """Build an oracle by name; only Pollard rho uses the seed."""
    if name == TrialDivisionOracle.name:
        return TrialDivisionOracle()
    if name == FermatOracle.name:
        return FermatOracle()
    if name == PollardRhoOracle.name:
        return PollardRhoOracle(seed=seed)
    raise InputError(f"unknown factoring algorithm {name!r}; choose from {ORACLE_NAMES}")
