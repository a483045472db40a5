"""Views over a record set: extrapolations and the published tables."""

import math
from typing import Dict, List, Optional

from src.effort.bit_length import BitLength
from src.effort.nfs_effort import BitsLike, ln_effort_ratio
from src.errors import InputError
from src.records.factoring_record import Algorithm, FactoringRecord
from src.records.record_loader import ExtrapolationAnnotation
from src.util.log_scale import exp_if_representable


def ln_extrapolate_effort(source: FactoringRecord, target_bits: BitsLike) -> float:
    """Natural log of the MIPS-years for ``target_bits`` scaled from ``source``."""
    if source.mips_years is None:
        raise InputError(f"record {source.name!r} has no MIPS-years figure")
    return math.log(source.mips_years) + ln_effort_ratio(BitLength.of(target_bits), source.effective_bits)


def extrapolate_effort(source: FactoringRecord, target_bits: BitsLike) -> float:
    """MIPS-years for ``target_bits`` scaled from ``source`` by the L-model ratio.

    Returns inf past the float range; ``ln_extrapolate_effort`` still holds the value.
    """
    mips_years = exp_if_representable(ln_extrapolate_effort(source, target_bits))
    return math.inf if mips_years is None else mips_years


def find_record(records: List[FactoringRecord], name: str, year: Optional[int] = None) -> FactoringRecord:
    matches = [r for r in records if r.name == name and (year is None or r.date_factored.year == year)]
    if not matches:
        suffix = f" in {year}" if year is not None else ''
        raise InputError(f"no record named {name!r}{suffix}")
    return matches[0]


def _timed_record(records: List[FactoringRecord], bits: int, year: Optional[int] = None) -> FactoringRecord:
    for record in records:
        if (record.wall_hours is not None and record.effective_bits.bits == bits
                and (year is None or record.date_factored.year == year)):
            return record
    raise InputError(f"no timed record for {bits} bits" + (f" in {year}" if year else ''))


def extrapolation_report(records: List[FactoringRecord],
                         annotations: List[ExtrapolationAnnotation]) -> List[dict]:
    """Published extrapolations next to the L-model figure and the actual effort."""
    rows = []
    for annotation in annotations:
        target = find_record(records, annotation.target)
        source = find_record(records, annotation.source)
        rows.append({
            'target': annotation.target,
            'source': annotation.source,
            'published_mips_years': annotation.mips_years,
            'model_mips_years': extrapolate_effort(source, target.effective_bits),
            'actual_mips_years': target.mips_years,
        })
    return rows


def mpqs_to_nfs_improvement(records: List[FactoringRecord]) -> float:
    """MIPS-years of the last MPQS record over the first NFS record."""
    mpqs = [r for r in records if r.algorithm is Algorithm.MPQS and r.mips_years is not None]
    nfs = [r for r in records if r.algorithm is Algorithm.NFS and r.mips_years is not None]
    if not mpqs or not nfs:
        raise InputError("need MIPS-year figures for both MPQS and NFS records")
    return mpqs[-1].mips_years / nfs[0].mips_years


def table2_rows(records: List[FactoringRecord],
                annotations: List[ExtrapolationAnnotation]) -> List[dict]:
    """Records with a MIPS-year figure and their published extrapolations."""
    rows = []
    for record in records:
        if record.mips_years is None:
            continue
        row = {
            'name': record.name,
            'year': record.date_factored.year,
            'mips_years': record.mips_years,
            'algorithm': record.algorithm.value,
        }
        for annotation in annotations:
            if annotation.target == record.name:
                row[f"from_{annotation.source}"] = annotation.mips_years
        rows.append(row)
    return rows


def table3_rows(records: List[FactoringRecord]) -> List[dict]:
    """Records with a measured wall-clock time."""
    return [{
        'name': f"RSA-{r.effective_bits.bits}",
        'year': r.date_factored.year,
        'hours': r.wall_hours,
    } for r in records if r.wall_hours is not None]


def table3_ratios(records: List[FactoringRecord]) -> Dict[str, float]:
    """Speedup of RSA-512 between 1999 and 2015, and RSA-768 (2009) over RSA-512 (1999)."""
    first_512 = _timed_record(records, 512, 1999)
    second_512 = _timed_record(records, 512, 2015)
    rsa_768 = _timed_record(records, 768)
    return {
        'rsa512_speedup_1999_2015': first_512.wall_hours / second_512.wall_hours,
        'rsa768_over_rsa512_1999': rsa_768.wall_hours / first_512.wall_hours,
    }
