import json

import pytest

from src.errors import ConfigError, InputError
from src.estimator import ProtectionMode
from src.estimator_builder import EstimatorBuilder
from src.moore import CalendarDate
from src.settings import Settings


class TestSettings:
    def test_defaults(self):
        s = Settings()
        assert (s.baseline_bits, s.baseline_hours, s.baseline_year, s.baseline_month) == (512, 4.0, 2015, 1)
        assert s.doubling_months == 18.0
        assert s.output_format == 'table'
        assert s.records_file is None

    def test_int_values_for_float_fields_become_floats(self):
        s = Settings(doubling_months=24)
        assert s.doubling_months == 24.0
        assert isinstance(s.doubling_months, float)

    @pytest.mark.parametrize('overrides', [
        {'doubling_period': 18},
        {'baseline_bits': '512'},
        {'baseline_bits': 512.5},
        {'seed': True},
        {'round_to_standard': 1},
        {'output_format': 'xml'},
    ])
    def test_rejects_bad_overrides(self, overrides):
        with pytest.raises(ConfigError):
            Settings(**overrides)

    def test_from_file(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text(json.dumps({'doubling_months': 24, 'margin': 2, 'records_file': None}), encoding='utf-8')
        s = Settings.from_file(path)
        assert s.doubling_months == 24.0
        assert s.margin == 2.0
        assert s.to_dict()['baseline_bits'] == 512

    @pytest.mark.parametrize('text', ['{"margin": ', '[1, 2]', '{"colour": "blue"}'])
    def test_from_file_errors(self, tmp_path, text):
        path = tmp_path / 'config.json'
        path.write_text(text, encoding='utf-8')
        with pytest.raises(ConfigError):
            Settings.from_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match='cannot read'):
            Settings.from_file(tmp_path / 'absent.json')

    def test_repr(self):
        assert repr(Settings()).startswith("Settings(baseline=RSA-512@4.0h/2015-01, doubling=18.0mo")


class TestEstimatorBuilder:
    def test_falls_back_to_settings(self):
        baseline, model = EstimatorBuilder(settings=Settings(doubling_months=24, baseline_year=2016)).build()
        assert baseline.date == CalendarDate(2016)
        assert baseline.wall_hours == 4.0
        assert model.period_months == 24.0

    def test_arguments_override_settings(self):
        builder = EstimatorBuilder(baseline_bits=768, baseline_hours=21600, baseline_date=CalendarDate(2009, 12),
                                   doubling_months=12, settings=Settings(doubling_months=24))
        baseline, model = builder.build()
        assert baseline.bits.bits == 768
        assert baseline.wall_hours == 21600.0
        assert model.period_months == 12.0

    def test_preset(self):
        _, model = EstimatorBuilder(doubling_preset='calibrated-rsa512', settings=Settings()).build()
        assert model.period_months == pytest.approx(18.6422, abs=1e-3)

    def test_query_uses_margin_and_mode(self):
        builder = EstimatorBuilder(settings=Settings(margin=2, mode='cumulative-work'))
        query = builder.query(CalendarDate(2018), 10)
        assert query.margin == 2.0
        assert query.mode is ProtectionMode.CUMULATIVE_WORK

    def test_invalid_values_surface_as_input_errors(self):
        with pytest.raises(InputError):
            EstimatorBuilder(baseline_hours=0, settings=Settings()).build()
        with pytest.raises(InputError):
            EstimatorBuilder(mode='forever', settings=Settings())
