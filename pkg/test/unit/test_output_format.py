import math

from src.util.output_format import render_csv, render_json, render_rows, render_table


ROWS = [
    {'name': 'RSA-512', 'hours': 4.0, 'done': True, 'note': None},
    {'name': 'RSA-768', 'hours': 24567.125, 'done': False, 'note': 'projected'},
]
COLUMNS = ['name', 'hours', 'done', 'note']


def test_csv():
    assert render_csv(ROWS, COLUMNS).splitlines() == [
        'name,hours,done,note',
        'RSA-512,4,true,',
        'RSA-768,24567.125,false,projected',
    ]


def test_table_is_right_aligned_with_a_separator():
    lines = render_table(ROWS, COLUMNS).splitlines()
    assert lines[0].split() == COLUMNS
    assert set(lines[1].replace(' ', '')) == {'-'}
    assert len(lines) == 4
    assert lines[2].startswith('RSA-512')


def test_json_keeps_non_finite_values_readable():
    text = render_json({'hours': math.inf, 'values': [1.5, math.nan]})
    assert '"inf"' in text and '"nan"' in text
    assert text.endswith('\n')


def test_render_rows_defaults_columns_to_first_row():
    assert render_rows(ROWS, None, 'csv').splitlines()[0] == 'name,hours,done,note'
    assert render_rows(ROWS, COLUMNS, 'json').lstrip().startswith('[')
