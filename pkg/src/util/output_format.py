"""Rendering rows of results as an aligned table, CSV or JSON.

Numbers are always written with '.' as the decimal separator; CSV and JSON
carry at least twelve significant digits.
"""

import csv
import io
import json
import math
from typing import Any, Iterable, List, Optional, Sequence


FORMATS = ('table', 'csv', 'json')

_CSV_FLOAT = '{:.12g}'
_TABLE_FLOAT = '{:.9g}'


def _cell(value: Any, float_format: str) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return float_format.format(value) if math.isfinite(value) else str(value)
    return str(value)


def json_safe(value: Any) -> Any:
    """Replace non-finite floats (not valid JSON) with their string form."""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return value


def render_json(value: Any) -> str:
    return json.dumps(json_safe(value), indent=2, allow_nan=False) + '\n'


def render_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c), _CSV_FLOAT) for c in columns])
    return buffer.getvalue()


def render_table(rows: Iterable[dict], columns: Sequence[str]) -> str:
    cells = [list(columns)] + [[_cell(row.get(c), _TABLE_FLOAT) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ['  '.join(text.rjust(width) for text, width in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'


def render_rows(rows: List[dict], columns: Optional[Sequence[str]], fmt: str) -> str:
    """Render a list of flat dicts; ``columns`` defaults to the first row's keys."""
    if fmt == 'json':
        return render_json(rows)
    if columns is None:
        columns = list(rows[0]) if rows else []
    if fmt == 'csv':
        return render_csv(rows, columns)
    return render_table(rows, columns)
