import math

import pytest

from src.effort import (
    BitLength,
    EffortValue,
    effort_ratio,
    l_effort,
    l_exponent,
    ln_effort_ratio,
    log10_effort_ratio,
    security_bits,
)
from src.errors import InputError
from src.util.log_scale import exp_if_representable, ln_expm1, render_scientific


class TestBitLength:
    def test_accepts_range_limits(self):
        assert BitLength(2).bits == 2
        assert BitLength(1_000_000).bits == 1_000_000

    @pytest.mark.parametrize('bad', [0, 1, 1_000_001, -512])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(InputError):
            BitLength(bad)

    @pytest.mark.parametrize('bad', [True, 512.0, '512'])
    def test_rejects_non_integers(self, bad):
        with pytest.raises(InputError):
            BitLength(bad)

    def test_of_passes_through_existing_value(self):
        bl = BitLength(768)
        assert BitLength.of(bl) is bl
        assert BitLength.of(768) == bl

    def test_ln_modulus(self):
        assert BitLength(512).ln_modulus == pytest.approx(512 * math.log(2))


class TestNfsEffort:
    def test_rsa512_effort(self):
        effort = l_effort(512)
        assert effort.ln_effort == pytest.approx(44.31, abs=0.02)
        assert effort.linear() == pytest.approx(1.73671977e19, rel=0.05)

    def test_rsa2048_effort(self):
        assert l_effort(2048).linear() == pytest.approx(1.52377537e35, rel=0.05)

    @pytest.mark.parametrize('bits, expected', [
        (768, 6.14168242e3),
        (1024, 7.49732856e6),
        (2048, 8.77387012e15),
    ])
    def test_times_harder_than_rsa512(self, bits, expected):
        assert effort_ratio(bits, 512) == pytest.approx(expected, rel=0.02)

    def test_identical_inputs_give_exact_identity(self):
        assert ln_effort_ratio(1024, 1024) == 0.0
        assert effort_ratio(BitLength(1024), 1024) == 1.0

    def test_strictly_increasing(self):
        previous = l_effort(2).ln_effort
        for bits in range(3, 20_000, 37):
            current = l_effort(bits).ln_effort
            assert current > previous
            previous = current

    def test_ratios_compose(self):
        for a, b, c in [(512, 768, 1024), (600, 2048, 4096), (3072, 1000, 15360), (2, 1_000_000, 40_000)]:
            assert ln_effort_ratio(a, c) == pytest.approx(ln_effort_ratio(a, b) + ln_effort_ratio(b, c), abs=1e-12)

    @pytest.mark.parametrize('baseline', [512, 1024, 2048])
    def test_security_bits_shift_by_log2_ratio(self, baseline):
        for bits in range(256, 16_385, 256):
            expected = math.log2(effort_ratio(bits, baseline)) + security_bits(baseline)
            assert security_bits(bits) == pytest.approx(expected, abs=1e-9)

    def test_ratio_antisymmetry(self):
        assert ln_effort_ratio(512, 2048) == pytest.approx(-ln_effort_ratio(2048, 512))

    def test_ratio_beyond_float_range_falls_back_to_log10(self):
        assert effort_ratio(1_000_000, 2) == math.inf
        assert log10_effort_ratio(1_000_000, 2) == pytest.approx(417.5477, abs=1e-3)
        assert effort_ratio(2, 1_000_000) == 0.0

    def test_real_valued_exponent_matches_integer_effort(self):
        assert l_exponent(1024.0) == l_effort(1024).ln_effort
        assert l_exponent(1024.5) > l_exponent(1024.0)

    def test_security_bits(self):
        assert security_bits(512) == pytest.approx(63.93, abs=0.05)
        assert security_bits(1024) == pytest.approx(86.77, abs=0.05)


class TestEffortValue:
    def test_rejects_non_finite(self):
        with pytest.raises(InputError):
            EffortValue(math.inf)
        with pytest.raises(InputError):
            EffortValue(math.nan)

    def test_huge_values_stay_printable(self):
        effort = l_effort(1_000_000)
        assert effort.linear() is None
        assert effort.scientific().endswith(f"E+{math.floor(effort.log10)}")

    def test_log2_and_log10(self):
        effort = EffortValue(math.log(1024.0))
        assert effort.log2 == pytest.approx(10.0)
        assert effort.log10 == pytest.approx(math.log10(1024.0))


class TestLogScale:
    @pytest.mark.parametrize('value, expected', [
        (1.5e20, '1.50000000E+20'),
        (1.0, '1.00000000E+00'),
        (0.001, '1.00000000E-03'),
        (6141.68, '6.14168000E+03'),
    ])
    def test_render_scientific(self, value, expected):
        assert render_scientific(math.log(value)) == expected

    def test_render_scientific_beyond_float_range(self):
        assert render_scientific(1000 * math.log(10)) == '1.00000000E+1000'

    def test_render_scientific_digits(self):
        assert render_scientific(math.log(2.5e7), digits=3) == '2.50E+07'

    def test_exp_if_representable(self):
        assert exp_if_representable(0.0) == 1.0
        assert exp_if_representable(1000.0) is None

    def test_ln_expm1(self):
        assert ln_expm1(0.5) == pytest.approx(math.log(math.expm1(0.5)))
        assert ln_expm1(50.0) == pytest.approx(math.log(math.expm1(50.0)))
        assert ln_expm1(5000.0) == pytest.approx(5000.0)
