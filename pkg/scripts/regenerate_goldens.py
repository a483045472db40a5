"""Recompute every published table and compare it with the vendored goldens.

The files in goldens/ hold the values as printed in the source tables. This
script writes the toolkit's own CSV output next to them (default
build/tables/) and reports the largest relative deviation per table.

    python -m scripts.regenerate_goldens [--output-dir DIR]
"""

import argparse
import contextlib
import csv
import io
import logging
import sys
from pathlib import Path

from src.cli import TABLES, run


logger = logging.getLogger(__name__)

ROOT = Path(__file__).resolve().parent.parent
GOLDENS = ROOT / 'goldens'


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def _max_deviation(expected_rows, actual_rows):
    worst = 0.0
    for expected, actual in zip(expected_rows, actual_rows):
        for column, value in expected.items():
            try:
                e, a = float(value), float(actual.get(column, ''))
            except ValueError:
                continue
            if e != 0:
                worst = max(worst, abs(a - e) / abs(e))
    return worst


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument('--output-dir', default=str(ROOT / 'build' / 'tables'))
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    for which in sorted(TABLES):
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = run(['tables', '--which', str(which), '--format', 'csv'])
        if code != 0:
            logger.error(f"table {which} failed with exit code {code}")
            return code
        computed = buffer.getvalue()
        (out / f"table{which}.csv").write_text(computed, encoding='utf-8')
        golden = GOLDENS / f"table{which}.csv"
        if golden.exists():
            deviation = _max_deviation(_rows(golden.read_text(encoding='utf-8')), _rows(computed))
            print(f"table {which}: max relative deviation from golden {deviation:.4%}")
        else:
            print(f"table {which}: no golden file")
    return 0


if __name__ == '__main__':
    sys.exit(main())
