"""Timing harness that factors random semiprimes of growing size.

Each (seed, bits, trial) triple owns its own random stream, so samples are
identical whether trials run serially or in a process pool.
"""

import csv
import io
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.effort.bit_length import BitLength
from src.effort.nfs_effort import l_exponent
from src.errors import BudgetExceededError, FactoringError, InputError
from src.factoring_oracles.registry import make_oracle
from src.interfaces.benchmark_sample import BenchmarkSample
from src.interfaces.factoring_budget import FactoringBudget
from src.util.primality import random_prime


logger = logging.getLogger(__name__)

SAMPLE_HEADER = ('bits', 'trial', 'algorithm', 'wall_seconds', 'timeout')
# no product of two distinct 2-bit primes has 4 bits
MIN_SEMIPRIME_BITS = 5
DEFAULT_TIMEOUT_SECONDS = 30.0


def trial_rng(seed: int, bits: int, trial_index: int) -> random.Random:
    return random.Random(f"{seed}/{bits}/{trial_index}")


def oracle_seed(seed: int, bits: int, trial_index: int) -> int:
    """Seed for the factoring oracle of one trial, independent across sizes."""
    return random.Random(f"{seed}/{bits}/{trial_index}/oracle").getrandbits(64)


def make_semiprime(bits: int, rng: random.Random) -> Tuple[int, int, int]:
    """Random n = p * q with exactly ``bits`` bits and distinct balanced primes."""
    if bits < MIN_SEMIPRIME_BITS:
        raise InputError(f"semiprimes need at least {MIN_SEMIPRIME_BITS} bits, got {bits}")
    p_bits = (bits + 1) // 2
    while True:
        p = random_prime(p_bits, rng)
        q = random_prime(bits - p_bits, rng)
        n = p * q
        if p != q and n.bit_length() == bits:
            return n, min(p, q), max(p, q)


def _run_trial(algorithm: str, bits: int, trial_index: int, seed: int,
               timeout_seconds: Optional[float]) -> BenchmarkSample:
    n, p, _ = make_semiprime(bits, trial_rng(seed, bits, trial_index))
    oracle = make_oracle(algorithm, seed=oracle_seed(seed, bits, trial_index))
    budget = FactoringBudget(timeout_seconds=timeout_seconds)
    start = time.perf_counter()
    try:
        f = oracle.find_factor(n, budget)
        timed_out = False
    except BudgetExceededError:
        f = None
        timed_out = True
    elapsed = time.perf_counter() - start
    if f is not None and f not in (p, n // p):
        raise FactoringError(f"{oracle!r} returned {f} for {n} = {p} * {n // p}")
    return BenchmarkSample(bits, trial_index, algorithm, elapsed, timed_out, n, budget.steps)


@dataclass(frozen=True)
class GrowthFit:
    """ln(median seconds) = slope * L-exponent(bits) + intercept."""

    slope: float
    intercept: float
    r_squared: float
    sizes: Tuple[int, ...]
    medians: Tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'r2': self.r_squared,
            'sizes': list(self.sizes),
            'medians': list(self.medians),
        }


def median_seconds(samples: Sequence[BenchmarkSample]) -> Dict[int, float]:
    """Median wall time per size over trials that finished; sizes with no finished trial are left out."""
    by_size: Dict[int, List[float]] = {}
    for sample in samples:
        if not sample.timed_out:
            by_size.setdefault(sample.bits, []).append(sample.wall_seconds)
    return {bits: float(np.median(times)) for bits, times in sorted(by_size.items())}


def fit_growth(medians: Dict[int, float]) -> Optional[GrowthFit]:
    """Regress ln(median) on the sub-exponential exponent shape; None below two sizes."""
    if len(medians) < 2:
        return None
    sizes = tuple(sorted(medians))
    x = np.array([l_exponent(b) for b in sizes])
    # clamp so a zero-resolution timer reading stays finite in log space
    y = np.log(np.maximum(np.array([medians[b] for b in sizes]), 1e-9))
    slope, intercept = np.polyfit(x, y, 1)
    fitted = intercept + slope * x
    ss_res = float(np.sum((y - fitted) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return GrowthFit(float(slope), float(intercept), r_squared, sizes, tuple(medians[b] for b in sizes))


@dataclass
class BenchmarkReport:
    algorithm: str
    trials: int
    samples: List[BenchmarkSample]
    medians: Dict[int, float]
    fit: Optional[GrowthFit]
    timeouts: int = field(init=False)

    def __post_init__(self):
        self.timeouts = sum(1 for s in self.samples if s.timed_out)

    def summary(self) -> dict:
        """The JSON summary: slope, r2, sizes and trials (slope and r2 are null without a fit)."""
        return {
            'algorithm': self.algorithm,
            'slope': self.fit.slope if self.fit else None,
            'r2': self.fit.r_squared if self.fit else None,
            'sizes': sorted({s.bits for s in self.samples}),
            'trials': self.trials,
            'medians': {str(b): m for b, m in self.medians.items()},
            'timeouts': self.timeouts,
        }

    def samples_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(SAMPLE_HEADER)
        for s in self.samples:
            writer.writerow([s.bits, s.trial_index, s.algorithm, f"{s.wall_seconds:.9f}",
                             'true' if s.timed_out else 'false'])
        return buffer.getvalue()


class FactoringBenchmark:
    """Runs ``trials`` factorizations per bit size with one oracle.

    Args:
        algorithm: Oracle name from factoring_oracles.ORACLE_NAMES.
        trials: Trials per size.
        seed: Root of every per-trial random stream.
        timeout_seconds: Per-sample wall budget; None disables it.
        workers: Processes to fan out over; 1 runs in this process.
    """

    def __init__(self, algorithm: str = 'pollard_rho', trials: int = 5, seed: int = 0,
                 timeout_seconds: Optional[float] = DEFAULT_TIMEOUT_SECONDS, workers: int = 1):
        if trials < 1:
            raise InputError(f"trials must be positive, got {trials}")
        if workers < 1:
            raise InputError(f"workers must be positive, got {workers}")
        self.oracle = make_oracle(algorithm, seed)
        self.algorithm = algorithm
        self.trials = trials
        self.seed = seed
        self.timeout_seconds = timeout_seconds
        self.workers = workers

    def _check_sizes(self, bit_sizes: Sequence) -> List[int]:
        sizes = sorted({BitLength.of(b).bits for b in bit_sizes})
        if not sizes:
            raise InputError("benchmark needs at least one bit size")
        for bits in sizes:
            if bits < MIN_SEMIPRIME_BITS:
                raise InputError(f"semiprimes need at least {MIN_SEMIPRIME_BITS} bits, got {bits}")
            if bits > self.oracle.recommended_max_bits:
                logger.warning(f"{bits} bits is past the {self.oracle.recommended_max_bits}-bit "
                               f"desk-scale range of {self.algorithm}; expect timeouts")
        return sizes

    def run(self, bit_sizes: Sequence) -> BenchmarkReport:
        sizes = self._check_sizes(bit_sizes)
        jobs = [(self.algorithm, bits, t, self.seed, self.timeout_seconds)
                for bits in sizes for t in range(self.trials)]
        logger.info(f"Benchmarking {self.algorithm} on sizes {sizes} with {self.trials} trials each")
        if self.workers == 1:
            samples = [_run_trial(*job) for job in jobs]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                samples = list(pool.map(_run_trial, *zip(*jobs)))
        samples.sort(key=lambda s: (s.bits, s.trial_index))
        medians = median_seconds(samples)
        report = BenchmarkReport(self.algorithm, self.trials, samples, medians, fit_growth(medians))
        if report.timeouts:
            logger.warning(f"{report.timeouts} of {len(samples)} samples hit the "
                           f"{self.timeout_seconds}s budget and were left out of the fit")
        if report.fit is None:
            logger.info("Growth fit unavailable: fewer than two sizes with finished trials")
        return report


def benchmark_factoring(bit_sizes: Sequence, trials_per_size: int = 5, algorithm: str = 'pollard_rho',
                        seed: int = 0, timeout_seconds: Optional[float] = DEFAULT_TIMEOUT_SECONDS,
                        workers: int = 1) -> BenchmarkReport:
    return FactoringBenchmark(algorithm, trials_per_size, seed, timeout_seconds, workers).run(bit_sizes)
