import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from src.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, run
from src.effort import log10_effort_ratio
from src.records import RECORD_HEADER
from src.rsa_lab import key_breaker
from src.util.output_format import render_json


REPO_ROOT = Path(__file__).resolve().parents[2]


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_effort_json(capsys):
    code, out, _ = invoke(capsys, 'effort', '--bits', '512', '2048', '--format', 'json')
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [r['bits'] for r in rows] == [512, 2048]
    assert rows[0]['security_bits'] == pytest.approx(64, abs=0.1)
    assert rows[0]['effort'].endswith('E+19')


def test_global_options_before_or_after_the_command(capsys):
    _, before, _ = invoke(capsys, '--format', 'csv', 'ratio', '--target', '768')
    _, after, _ = invoke(capsys, 'ratio', '--target', '768', '--format', 'csv')
    assert before == after
    assert before.startswith('target,baseline,ratio')


@pytest.mark.parametrize('argv, code', [
    (['effort'], EXIT_USAGE),
    (['no-such-command'], EXIT_USAGE),
    (['effort', '--bits', '1'], EXIT_DOMAIN_ERROR),
    (['calibrate', '--hours-early', '4', '--hours-late', '5040', '--months', '192'], EXIT_DOMAIN_ERROR),
    (['estimate', '--bits', '1024'], EXIT_DOMAIN_ERROR),
    (['min-bits', '--from', '2018', '--lifespan', '25', '--cap', '512'], EXIT_DOMAIN_ERROR),
])
def test_exit_codes(capsys, argv, code):
    assert invoke(capsys, *argv)[0] == code


def test_domain_errors_are_reported_on_stderr(capsys):
    code, out, err = invoke(capsys, 'levels', '--family', 'rsa', '--level', '100')
    assert code == EXIT_DOMAIN_ERROR
    assert out == ''
    assert err.startswith('error:')


def test_calibrate(capsys):
    code, out, _ = invoke(capsys, 'calibrate', '--hours-early', '5040', '--hours-late', '4',
                          '--from', '1999', '--to', '2015', '--format', 'json')
    assert code == EXIT_OK
    row = json.loads(out)[0]
    assert row['months'] == 192
    assert row['doubling_months'] == pytest.approx(18.6422, abs=1e-3)
    assert row['projected_hours'] == pytest.approx(3.10059, abs=1e-3)


def test_estimate_rsa768(capsys):
    _, out, _ = invoke(capsys, 'estimate', '--bits', '768', '--year', '2015', '--format', 'json')
    assert json.loads(out)[0]['hours'] == pytest.approx(24567, rel=0.02)


def test_min_bits_and_horizon_agree(capsys):
    _, out, _ = invoke(capsys, 'min-bits', '--from', '2018', '--lifespan', '25', '--format', 'csv')
    bits = int(next(csv.DictReader(io.StringIO(out)))['bits'])
    assert 1024 < bits < 2048
    _, out, _ = invoke(capsys, 'horizon', '--bits', str(bits), '--from', '2018', '--format', 'csv')
    assert int(next(csv.DictReader(io.StringIO(out)))['months']) >= 300


def test_min_bits_rounding(capsys):
    _, out, _ = invoke(capsys, 'min-bits', '--from', '2018', '--lifespan', '25', '--round', '--format', 'csv')
    assert next(csv.DictReader(io.StringIO(out)))['bits'] == '1536'


def test_table4_shows_calibrated_period(capsys):
    code, out, _ = invoke(capsys, 'tables', '--which', '4')
    assert code == EXIT_OK
    assert '18.6422' in out


def test_policy_and_levels(capsys):
    _, out, _ = invoke(capsys, 'policy', '--year', '2031', '--format', 'csv')
    assert out.splitlines()[1] == '2031,3072'
    _, out, _ = invoke(capsys, 'levels', '--family', 'ecdsa', '--bits', '256', '--format', 'csv')
    assert out.splitlines()[1] == 'ECC,256,128'


COMMANDS = [
    ('effort', '--bits', '512', '768', '2048', '15360'),
    ('ratio', '--target', '2048'),
    ('calibrate', '--hours-early', '5040', '--hours-late', '4', '--months', '192'),
    ('estimate', '--bits', '768', '1024', '1000000', '--year', '2020'),
    ('min-bits', '--from', '2018', '--lifespan', '25'),
    ('min-bits', '--from', '2018', '--lifespan', '25', '--mode', 'cumulative-work'),
    ('horizon', '--bits', '2048', '--from', '2018'),
    ('levels',),
    ('levels', '--family', 'rsa', '--level', '128'),
    ('policy', '--year', '2031'),
    *[('tables', '--which', str(which)) for which in range(1, 9)],
    ('records', 'load'),
    ('records', 'fit', '--predict', '2030'),
    ('records', 'extrapolate'),
    ('records', 'extrapolate', '--source', 'RSA-140', '--target-bits', '1000000'),
    ('rsa', 'keygen', '--bits', '64', '--seed', '5'),
    ('rsa', 'break', '--n', '143', '--e', '7', '--c', '47'),
]


def assert_cell_matches(cell, value):
    if value is None:
        assert cell == ''
    elif isinstance(value, bool):
        assert cell == ('true' if value else 'false')
    elif isinstance(value, int):
        assert cell == str(value)
    elif isinstance(value, float):
        assert float(cell) == pytest.approx(value, rel=1e-11)
    else:
        assert cell == str(value)


@pytest.mark.parametrize('argv', COMMANDS, ids=' '.join)
@pytest.mark.parametrize('fmt', ['csv', 'json'])
def test_output_is_deterministic(capsys, argv, fmt):
    first_code, first, _ = invoke(capsys, *argv, '--format', fmt)
    second_code, second, _ = invoke(capsys, *argv, '--format', fmt)
    assert first_code == second_code == EXIT_OK
    assert first == second


@pytest.mark.parametrize('argv', COMMANDS, ids=' '.join)
def test_json_numbers_round_trip(capsys, argv):
    code, out, _ = invoke(capsys, *argv, '--format', 'json')
    assert code == EXIT_OK
    document = json.loads(out)
    assert render_json(document) == out
    if not isinstance(document, list):
        return
    _, out, _ = invoke(capsys, *argv, '--format', 'csv')
    csv_rows = list(csv.DictReader(io.StringIO(out)))
    assert len(csv_rows) == len(document)
    for csv_row, json_row in zip(csv_rows, document):
        for column, cell in csv_row.items():
            assert_cell_matches(cell, json_row.get(column))


def test_bench_is_deterministic_apart_from_timings(capsys):
    argv = ('bench', 'factor', '--sizes', '20', '24', '--trials', '2', '--seed', '3', '--format', 'json')
    runs = []
    for _ in range(2):
        code, out, _ = invoke(capsys, *argv)
        assert code == EXIT_OK
        document = json.loads(out)
        assert render_json(document) == out
        for sample in document['samples']:
            assert isinstance(sample['wall_seconds'], float)
            del sample['wall_seconds']
        for key in ('slope', 'r2', 'medians'):
            del document['summary'][key]
        runs.append(document)
    assert runs[0] == runs[1]


def test_extrapolation_beyond_float_range_prints_log_form(capsys):
    code, out, _ = invoke(capsys, 'records', 'extrapolate', '--source', 'RSA-140',
                          '--target-bits', '1000000', '--format', 'json')
    assert code == EXIT_OK
    row = json.loads(out)[0]
    assert isinstance(row['model_mips_years'], str)
    assert 'E+' in row['model_mips_years']
    expected = math.log10(2100.0) + log10_effort_ratio(1_000_000, 463)
    assert expected > 308
    assert row['log10_model_mips_years'] == pytest.approx(expected, rel=1e-12)


def test_rsa_break_factors_the_modulus_once(capsys, monkeypatch):
    calls = []
    factor = key_breaker.pollard_rho

    def counting_rho(n, **kwargs):
        calls.append(n)
        return factor(n, **kwargs)

    monkeypatch.setattr(key_breaker, 'pollard_rho', counting_rho)
    code, out, _ = invoke(capsys, 'rsa', 'break', '--n', '143', '--e', '7', '--c', '47', '--format', 'csv')
    assert code == EXIT_OK
    assert out.splitlines()[1] == '103,11,13,120,5'
    assert calls == [143]


def test_rsa_round_trip(capsys):
    _, out, _ = invoke(capsys, 'rsa', 'keygen', '--bits', '8', '--format', 'json')
    key = json.loads(out)[0]
    assert (key['n'], key['e'], key['d']) == (143, 7, 103)
    _, out, _ = invoke(capsys, 'rsa', 'encrypt', '--n', '143', '--e', '7', '--m', '5', '--format', 'csv')
    assert out.splitlines()[1] == '47'
    _, out, _ = invoke(capsys, 'rsa', 'break', '--n', '143', '--e', '7', '--c', '47', '--format', 'json')
    assert json.loads(out)[0] == {'d': 103, 'p': 11, 'q': 13, 'phi': 120, 'm': 5}


def test_rsa_break_budget(capsys):
    code, _, err = invoke(capsys, 'rsa', 'break', '--n', str(1_000_003 * 1_000_033), '--e', '65537',
                          '--max-steps', '1')
    assert code == EXIT_DOMAIN_ERROR
    assert 'could not factor' in err


def test_seed_must_be_unsigned_64_bit(capsys):
    assert invoke(capsys, 'rsa', 'keygen', '--bits', '8', '--seed', '-1')[0] == EXIT_DOMAIN_ERROR


def test_config_file(tmp_path, capsys):
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'doubling_months': 24, 'output_format': 'csv'}), encoding='utf-8')
    code, out, _ = invoke(capsys, 'tables', '--which', '4', '--config', str(config))
    assert code == EXIT_OK
    assert out.splitlines()[2].split(',')[3] == '24'


def test_bad_config_file(tmp_path, capsys):
    config = tmp_path / 'config.json'
    config.write_text('{"doubling": 24}', encoding='utf-8')
    code, _, err = invoke(capsys, 'effort', '--bits', '512', '--config', str(config))
    assert code == EXIT_DOMAIN_ERROR
    assert 'doubling' in err


def test_records_commands(tmp_path, capsys):
    code, out, _ = invoke(capsys, 'records', 'load', '--format', 'csv')
    assert code == EXIT_OK
    assert out.splitlines()[0] == ','.join(RECORD_HEADER)
    assert len(out.splitlines()) == 9
    _, out, _ = invoke(capsys, 'records', 'fit', '--predict', '2030', '--format', 'json')
    assert json.loads(out)['b'] > 0
    _, out, _ = invoke(capsys, 'records', 'extrapolate', '--format', 'json')
    assert json.loads(out)['mpqs_to_nfs_improvement'] == 5.0


def test_bad_records_file_names_the_line(tmp_path, capsys):
    path = tmp_path / 'records.csv'
    path.write_text(','.join(RECORD_HEADER) + '\nRSA-155,512,155,1999,oops,,NFS\n', encoding='utf-8')
    code, _, err = invoke(capsys, 'records', 'load', '--records-file', str(path))
    assert code == EXIT_DOMAIN_ERROR
    assert 'line 2' in err


def test_bench_factor(tmp_path, capsys):
    code, out, _ = invoke(capsys, 'bench', 'factor', '--sizes', '20', '24', '--trials', '2',
                          '--format', 'csv', '--output-dir', str(tmp_path))
    assert code == EXIT_OK
    assert out.splitlines()[0] == 'bits,trial,algorithm,wall_seconds,timeout'
    assert len(out.splitlines()) == 5
    summary = json.loads((tmp_path / 'summary.json').read_text(encoding='utf-8'))
    assert summary['sizes'] == [20, 24]
    assert summary['trials'] == 2
    assert (tmp_path / 'samples.csv').read_text(encoding='utf-8') == out


def test_module_entry_point():
    result = subprocess.run([sys.executable, '-m', 'src.main', 'effort', '--bits', '512', '--format', 'csv'],
                            cwd=REPO_ROOT, capture_output=True, text=True, timeout=120)
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == 'bits,effort,ln_effort,log10_effort,security_bits'
