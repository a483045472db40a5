"""Reading and writing factoring-record files.

Format: UTF-8 comma-separated text with the header
``name,bits,decimal_digits,date_factored,wall_hours,mips_years,algorithm``.
Empty fields are absent values; dates are ``YYYY`` or ``YYYY-MM``.
"""

import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Union

from src.errors import DuplicateRecordError, InputError, RecordParseError, RecordValidationError
from src.moore.calendar_date import CalendarDate
from src.records.factoring_record import Algorithm, FactoringRecord


logger = logging.getLogger(__name__)

RECORD_HEADER = ('name', 'bits', 'decimal_digits', 'date_factored', 'wall_hours', 'mips_years', 'algorithm')
ANNOTATION_HEADER = ('target', 'source', 'mips_years')

DATA_DIR = Path(__file__).parent / 'data'
BUNDLED_RECORDS = DATA_DIR / 'factoring_records.csv'
BUNDLED_ANNOTATIONS = DATA_DIR / 'extrapolations.csv'


@dataclass(frozen=True)
class ExtrapolationAnnotation:
    """A published MIPS-year extrapolation from one record to another."""

    target: str
    source: str
    mips_years: float

    def to_dict(self) -> dict:
        return {'target': self.target, 'source': self.source, 'mips_years': self.mips_years}


def _optional(text: str, convert: Callable, line_number: int, field: str):
    text = text.strip()
    if not text:
        return None
    try:
        return convert(text)
    except ValueError:
        raise RecordParseError(f"field {field!r} has invalid value {text!r}", line_number) from None


def _data_rows(source: str, header: tuple):
    """Yield (line_number, fields) for every non-blank data row after the header."""
    reader = csv.reader(io.StringIO(source))
    header_seen = False
    for fields in reader:
        line_number = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        if not header_seen:
            if tuple(f.strip() for f in fields) != header:
                raise RecordParseError(f"expected header {','.join(header)}", line_number)
            header_seen = True
            continue
        if len(fields) != len(header):
            raise RecordParseError(f"expected {len(header)} fields, got {len(fields)}", line_number)
        yield line_number, fields


def _parse_row(fields: List[str], line_number: int) -> FactoringRecord:
    name, bits, digits, date, hours, mips, algorithm = fields
    try:
        date_factored = CalendarDate.parse(date)
        parsed_algorithm = Algorithm.parse(algorithm)
    except InputError as e:
        raise RecordParseError(str(e), line_number) from None
    return FactoringRecord(
        name=name.strip(),
        date_factored=date_factored,
        algorithm=parsed_algorithm,
        bits=_optional(bits, int, line_number, 'bits'),
        decimal_digits=_optional(digits, int, line_number, 'decimal_digits'),
        wall_hours=_optional(hours, float, line_number, 'wall_hours'),
        mips_years=_optional(mips, float, line_number, 'mips_years'),
    )


def load_records(source: str) -> List[FactoringRecord]:
    """Parse and validate record-file content.

    Args:
        source: Full text of a record file.

    Returns:
        Validated records sorted by date (stable for equal dates).

    Raises:
        RecordParseError: A row is malformed; names the line.
        RecordValidationError: A record violates an invariant; names the record.
        DuplicateRecordError: Two rows share a (name, date) pair.
    """
    records = []
    seen = set()
    for line_number, fields in _data_rows(source, RECORD_HEADER):
        try:
            record = _parse_row(fields, line_number)
        except RecordValidationError as e:
            logger.warning(f"Rejected record on line {line_number}: {e}")
            raise
        key = (record.name, record.date_factored)
        if key in seen:
            raise DuplicateRecordError(f"duplicate entry for {record.date_factored}", record.name)
        seen.add(key)
        records.append(record)
    records.sort(key=lambda r: r.date_factored)
    return records


def load_records_file(path: Union[str, Path]) -> List[FactoringRecord]:
    path = Path(path)
    records = load_records(path.read_text(encoding='utf-8'))
    logger.info(f"Loaded {len(records)} factoring records from {path}")
    return records


def load_bundled_records() -> List[FactoringRecord]:
    """The vendored dataset of published factoring records."""
    return load_records_file(BUNDLED_RECORDS)


def _format_optional(value) -> str:
    if value is None:
        return ''
    return repr(value) if isinstance(value, float) else str(value)


def serialize_records(records: List[FactoringRecord]) -> str:
    """Render records in the record-file format accepted by load_records."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(RECORD_HEADER)
    for record in records:
        writer.writerow([
            record.name,
            _format_optional(record.bits),
            _format_optional(record.decimal_digits),
            str(record.date_factored),
            _format_optional(record.wall_hours),
            _format_optional(record.mips_years),
            record.algorithm.value,
        ])
    return buffer.getvalue()


def load_extrapolation_annotations(path: Optional[Union[str, Path]] = None) -> List[ExtrapolationAnnotation]:
    path = Path(path) if path is not None else BUNDLED_ANNOTATIONS
    annotations = []
    for line_number, (target, source, mips) in _data_rows(path.read_text(encoding='utf-8'), ANNOTATION_HEADER):
        value = _optional(mips, float, line_number, 'mips_years')
        if value is None or value <= 0:
            raise RecordParseError("mips_years must be a positive number", line_number)
        annotations.append(ExtrapolationAnnotation(target.strip(), source.strip(), value))
    return annotations
