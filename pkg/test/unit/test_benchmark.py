import math
import random

import pytest

from src.effort import l_exponent
from src.errors import InputError
from src.interfaces import BenchmarkSample
from src.rsa_lab import FactoringBenchmark, benchmark_factoring, fit_growth, make_semiprime, median_seconds
from src.rsa_lab.benchmark import SAMPLE_HEADER, oracle_seed
from src.util.primality import is_prime


def fingerprint(report):
    return [(s.bits, s.trial_index, s.modulus, s.steps, s.timed_out) for s in report.samples]


class TestSemiprimes:
    @pytest.mark.parametrize('bits', [5, 6, 16, 33, 64])
    def test_exact_size_and_distinct_prime_factors(self, bits):
        n, p, q = make_semiprime(bits, random.Random(bits))
        assert n.bit_length() == bits
        assert n == p * q and p < q
        assert is_prime(p) and is_prime(q)

    def test_too_small(self):
        with pytest.raises(InputError):
            make_semiprime(4, random.Random(0))

    def test_oracle_seeds_differ_across_sizes_and_trials(self):
        seeds = {oracle_seed(7, bits, trial) for bits in (24, 32, 40, 48) for trial in range(5)}
        assert len(seeds) == 20
        assert oracle_seed(7, 32, 0) == oracle_seed(7, 32, 0)
        assert all(0 <= s < 2 ** 64 for s in seeds)


class TestGrowthFit:
    def test_single_size_has_no_fit(self):
        assert fit_growth({32: 0.01}) is None
        assert fit_growth({}) is None

    def test_recovers_exact_slope(self):
        medians = {b: math.exp(0.5 * l_exponent(b) - 3.0) for b in (32, 40, 48, 56, 64)}
        fit = fit_growth(medians)
        assert fit.slope == pytest.approx(0.5, rel=1e-9)
        assert fit.intercept == pytest.approx(-3.0, abs=1e-8)
        assert fit.r_squared == pytest.approx(1.0)
        assert fit.sizes == (32, 40, 48, 56, 64)

    def test_median_excludes_timeouts(self):
        samples = [
            BenchmarkSample(32, 0, 'pollard_rho', 1.0),
            BenchmarkSample(32, 1, 'pollard_rho', 3.0),
            BenchmarkSample(32, 2, 'pollard_rho', 2.0),
            BenchmarkSample(32, 3, 'pollard_rho', 100.0, timed_out=True),
            BenchmarkSample(40, 0, 'pollard_rho', 9.0, timed_out=True),
        ]
        assert median_seconds(samples) == {32: 2.0}


class TestFactoringBenchmark:
    def test_small_run(self):
        report = benchmark_factoring([24], trials_per_size=3, timeout_seconds=None)
        assert len(report.samples) == 3
        assert report.fit is None
        assert report.timeouts == 0
        assert all(s.modulus.bit_length() == 24 for s in report.samples)
        assert report.samples_csv().splitlines()[0] == ','.join(SAMPLE_HEADER)
        assert report.summary()['sizes'] == [24]

    def test_sizes_are_deduplicated_and_sorted(self):
        report = benchmark_factoring([20, 16, 20], trials_per_size=1, timeout_seconds=None)
        assert [s.bits for s in report.samples] == [16, 20]
        assert report.fit is not None

    def test_deterministic_for_a_seed(self):
        first = benchmark_factoring([24, 32], trials_per_size=2, seed=4, timeout_seconds=None)
        second = benchmark_factoring([24, 32], trials_per_size=2, seed=4, timeout_seconds=None)
        assert fingerprint(first) == fingerprint(second)

    def test_worker_pool_matches_serial_run(self):
        serial = benchmark_factoring([24, 28], trials_per_size=2, seed=1, timeout_seconds=None)
        pooled = benchmark_factoring([24, 28], trials_per_size=2, seed=1, timeout_seconds=None, workers=2)
        assert fingerprint(pooled) == fingerprint(serial)

    def test_timeouts_are_flagged_and_left_out(self):
        report = benchmark_factoring([40], trials_per_size=2, algorithm='trial_division', timeout_seconds=1e-6)
        assert report.timeouts == 2
        assert report.medians == {}
        assert report.summary()['slope'] is None
        assert 'true' in report.samples_csv()

    @pytest.mark.parametrize('kwargs', [{'trials': 0}, {'workers': 0}, {'algorithm': 'ecm'}])
    def test_rejects_bad_settings(self, kwargs):
        with pytest.raises(InputError):
            FactoringBenchmark(**kwargs)

    def test_rejects_empty_and_tiny_sizes(self):
        with pytest.raises(InputError):
            FactoringBenchmark().run([])
        with pytest.raises(InputError):
            FactoringBenchmark().run([4])


@pytest.mark.slow
def test_rho_cost_grows_with_size():
    report = benchmark_factoring([32, 40, 48, 56, 64], trials_per_size=5, timeout_seconds=None)
    medians = [report.medians[b] for b in (32, 40, 48, 56, 64)]
    assert all(a < b for a, b in zip(medians, medians[1:]))
    assert report.fit.slope > 0
