"""Command-line surface of the keylength toolkit.

Every subcommand maps to one library call and prints its result as an aligned
table, CSV or JSON. Exit codes: 0 on success, 1 on domain errors, 2 on usage
errors.
"""

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from src.effort import effort_ratio, l_effort, ln_effort_ratio, log10_effort_ratio, security_bits
from src.effort.bit_length import MAX_BITS
from src.errors import InputError, KeylengthError
from src.estimator import (
    TABLE_BITS,
    CryptoFamily,
    break_time,
    min_bitlength,
    policy_recommendation,
    protection_horizon,
    security_level_for,
    security_level_lookup,
    table1_rows,
    table6_estimates,
    table8_estimates,
)
from src.estimator.break_estimate import HOURS_PER_YEAR
from src.estimator_builder import EstimatorBuilder
from src.factoring_oracles import ORACLE_NAMES
from src.interfaces.factoring_budget import FactoringBudget
from src.moore import (
    CalendarDate,
    calibrate_doubling,
    ln_project_hours,
    months_between,
    project_hours,
    table4_rows,
    table7_schedule,
)
from src.moore.presets import PRESETS
from src.records import (
    Algorithm,
    extrapolate_effort,
    extrapolation_report,
    find_record,
    fit_trend,
    ln_extrapolate_effort,
    load_bundled_records,
    load_extrapolation_annotations,
    load_records_file,
    mpqs_to_nfs_improvement,
    table2_rows,
    table3_rows,
)
from src.rsa_lab import benchmark_factoring, break_key, decrypt, encrypt, keygen
from src.settings import Settings
from src.util.log_scale import ln_to_log10, render_scientific
from src.util.output_format import FORMATS, render_json, render_rows


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
MAX_SEED = 2 ** 64 - 1

TABLE7_START_ROWS = 8
TABLE8_BASELINE_MINUTES = 1.0


# --------------------------------------------------------------------------
# output

def _emit(args, rows: List[dict], columns: Optional[Sequence[str]] = None, document=None) -> str:
    """Render rows for table/csv; JSON gets ``document`` when given, else the rows."""
    if args.format == 'json' and document is not None:
        return render_json(document)
    return render_rows(rows, columns, args.format)


def _parse_date(text: str) -> CalendarDate:
    return CalendarDate.parse(text)


def _builder(args, settings: Settings) -> EstimatorBuilder:
    baseline_date = getattr(args, 'baseline_date', None)
    return EstimatorBuilder(
        baseline_bits=getattr(args, 'baseline_bits', None),
        baseline_hours=getattr(args, 'baseline_hours', None),
        baseline_date=_parse_date(baseline_date) if baseline_date else None,
        doubling_months=getattr(args, 'doubling_months', None),
        doubling_preset=getattr(args, 'preset', None),
        margin=getattr(args, 'margin', None),
        mode=getattr(args, 'mode', None),
        round_to_standard=getattr(args, 'round', None),
        settings=settings,
    )


def _records(args):
    if args.records_file:
        return load_records_file(args.records_file)
    return load_bundled_records()


# --------------------------------------------------------------------------
# effort / moore / estimator

def cmd_effort(args, settings: Settings) -> str:
    rows = []
    for b in args.bits:
        effort = l_effort(b)
        rows.append({
            'bits': b,
            'effort': effort.scientific(),
            'ln_effort': effort.ln_effort,
            'log10_effort': effort.log10,
            'security_bits': security_bits(b),
        })
    return _emit(args, rows)


def cmd_ratio(args, settings: Settings) -> str:
    ln_ratio = ln_effort_ratio(args.target, args.baseline)
    row = {
        'target': args.target,
        'baseline': args.baseline,
        'ratio': render_scientific(ln_ratio),
        'ln_ratio': ln_ratio,
        'log10_ratio': log10_effort_ratio(args.target, args.baseline),
    }
    return _emit(args, [row])


def cmd_calibrate(args, settings: Settings) -> str:
    if args.months is not None:
        months = args.months
    elif args.start and args.end:
        months = months_between(_parse_date(args.start), _parse_date(args.end))
    else:
        raise InputError("give either --months or both --from and --to")
    model = calibrate_doubling(args.hours_early, args.hours_late, months)
    _, assumed = _builder(args, settings).build()
    row = {
        'hours_early': args.hours_early,
        'hours_late': args.hours_late,
        'months': months,
        'doubling_months': model.period_months,
        'doubling_years': model.period_years,
        'assumed_doubling_months': assumed.period_months,
        'projected_hours': project_hours(args.hours_early, assumed, months),
        'log10_projected_hours': ln_to_log10(ln_project_hours(math.log(args.hours_early), assumed, months)),
    }
    return _emit(args, [row])


def cmd_estimate(args, settings: Settings) -> str:
    if args.date:
        at = _parse_date(args.date)
    elif args.year is not None:
        at = CalendarDate(args.year)
    else:
        raise InputError("give --year or --date")
    baseline, model = _builder(args, settings).build()
    estimates = [break_time(b, at, baseline, model) for b in args.bits]
    return _emit(args, [e.to_dict() for e in estimates], ('bits', 'at_date', 'hours', 'years', 'log10_hours'))


def cmd_min_bits(args, settings: Settings) -> str:
    builder = _builder(args, settings)
    baseline, model = builder.build()
    query = builder.query(_parse_date(args.start), args.lifespan)
    result = min_bitlength(query, baseline, model, round_up=builder.round_to_standard, cap=args.cap)
    row = {
        'bits': result.bits.bits,
        'raw_bits': result.raw_bits.bits,
        'protect_from': str(query.protect_from),
        'lifespan_years': query.lifespan_years,
        'expires': str(query.expires),
        'mode': query.mode.value,
        'margin': query.margin,
        'break_years_at_expiry': result.evidence.to_dict()['years'],
    }
    return _emit(args, [row], document=result.to_dict())


def cmd_horizon(args, settings: Settings) -> str:
    builder = _builder(args, settings)
    baseline, model = builder.build()
    result = protection_horizon(args.bits, _parse_date(args.start), baseline, model, builder.margin)
    row = {
        'bits': result.bits.bits,
        'protect_from': str(result.protect_from),
        'months': result.months,
        'years': result.years,
        'expires': str(result.expires),
        'capped': result.capped,
    }
    return _emit(args, [row], document=result.to_dict())


def cmd_levels(args, settings: Settings) -> str:
    if args.family is None:
        return _emit(args, table1_rows())
    family = CryptoFamily.parse(args.family)
    if args.level is not None:
        row = {'family': family.value, 'level': args.level,
               'key_bits': security_level_lookup(family, args.level).bits}
    elif args.bits is not None:
        row = {'family': family.value, 'key_bits': args.bits, 'level': security_level_for(family, args.bits)}
    else:
        rows = [r for r in table1_rows() if r['family'] == family.value]
        return _emit(args, rows)
    return _emit(args, [row])


def cmd_policy(args, settings: Settings) -> str:
    return _emit(args, [{'year': args.year, 'min_bits': policy_recommendation(args.year).bits}])


# --------------------------------------------------------------------------
# published tables

def _table1(args, settings):
    return table1_rows(), ('family', '80', '128', '192', '256')


def _table2(args, settings):
    annotations = load_extrapolation_annotations()
    rows = table2_rows(_records(args), annotations)
    extra = []
    for annotation in annotations:
        key = f"from_{annotation.source}"
        if key not in extra:
            extra.append(key)
    return rows, ('name', 'year', 'algorithm', 'mips_years', *extra)


def _table3(args, settings):
    return table3_rows(_records(args)), ('name', 'year', 'hours')


def _table4(args, settings):
    _, model = _builder(args, settings).build()
    rows = [r.to_dict() for r in table4_rows(assumed=model)]
    return rows, ('name', 'year', 'months_between', 'doubling_months', 'hours')


def _table5(args, settings):
    rows = [{
        'name': f"RSA-{b}",
        'bits': b,
        'effort': l_effort(b).linear(),
        'times_harder': effort_ratio(b, TABLE_BITS[0]),
    } for b in TABLE_BITS]
    return rows, ('name', 'bits', 'effort', 'times_harder')


def _table6(args, settings):
    baseline, model = _builder(args, settings).build()
    rows = []
    for row in table6_estimates(baseline, model):
        estimate = row['estimate']
        rows.append({
            'name': row['name'],
            'bits': row['bits'],
            'time_taken_hours': row['time_taken_hours'],
            'estimate_hours': estimate.hours,
            'estimate_years': estimate.years,
        })
    return rows, ('name', 'bits', 'time_taken_hours', 'estimate_hours', 'estimate_years')


def _table7(args, settings):
    baseline, model = _builder(args, settings).build()
    schedule = table7_schedule(baseline.wall_hours * 60.0, baseline.date, args.steps, model.period_years)
    return [r.to_dict() for r in schedule], ('year', 'years', 'minutes')


def _table8(args, settings):
    rows = [{
        'name': f"RSA-{e.bits.bits}",
        'bits': e.bits.bits,
        'minutes': e.minutes,
        'hours': e.hours,
        'years': e.hours / HOURS_PER_YEAR,
    } for e in table8_estimates(args.baseline_minutes)]
    return rows, ('name', 'bits', 'minutes', 'hours', 'years')


TABLES: Dict[int, Callable] = {
    1: _table1, 2: _table2, 3: _table3, 4: _table4,
    5: _table5, 6: _table6, 7: _table7, 8: _table8,
}


def cmd_tables(args, settings: Settings) -> str:
    rows, columns = TABLES[args.which](args, settings)
    return _emit(args, rows, columns)


# --------------------------------------------------------------------------
# records

_RECORD_COLUMNS = ('name', 'bits', 'decimal_digits', 'date_factored', 'wall_hours', 'mips_years', 'algorithm')


def cmd_records_load(args, settings: Settings) -> str:
    return _emit(args, [r.to_dict() for r in _records(args)], _RECORD_COLUMNS)


def cmd_records_fit(args, settings: Settings) -> str:
    records = _records(args)
    if args.algorithm:
        algorithm = Algorithm.parse(args.algorithm)
        records = [r for r in records if r.algorithm is algorithm]
    fit = fit_trend(records)
    row = {
        'points': len(records),
        'a': fit.a,
        'b': fit.b,
        't0': fit.t0,
        'r_squared': fit.r_squared,
        'doubling_years': fit.doubling_years,
    }
    if args.predict is not None:
        row['predicted_year'] = args.predict
        row['predicted_bits'] = fit.predict(args.predict)
    document = {**fit.to_dict(), 'points': len(records), 'doubling_years': fit.doubling_years}
    if args.predict is not None:
        document['predicted_bits'] = row['predicted_bits']
    return _emit(args, [row], document=document)


def _mips_years_cell(source, target_bits):
    """MIPS-years as a number, or in scientific notation past the float range."""
    mips_years = extrapolate_effort(source, target_bits)
    if math.isfinite(mips_years):
        return mips_years
    return render_scientific(ln_extrapolate_effort(source, target_bits))


def cmd_records_extrapolate(args, settings: Settings) -> str:
    records = _records(args)
    if args.source:
        source = find_record(records, args.source)
        if args.target_bits is None:
            raise InputError("--target-bits is required with --source")
        row = {
            'source': source.name,
            'source_bits': source.effective_bits.bits,
            'source_mips_years': source.mips_years,
            'target_bits': args.target_bits,
            'model_mips_years': _mips_years_cell(source, args.target_bits),
            'log10_model_mips_years': ln_to_log10(ln_extrapolate_effort(source, args.target_bits)),
        }
        return _emit(args, [row])
    rows = extrapolation_report(records, load_extrapolation_annotations())
    document = {'extrapolations': rows, 'mpqs_to_nfs_improvement': mpqs_to_nfs_improvement(records)}
    return _emit(args, rows, document=document)


# --------------------------------------------------------------------------
# rsa lab

def cmd_rsa_keygen(args, settings: Settings) -> str:
    key = keygen(args.bits, args.seed)
    return _emit(args, [{'n': key.n, 'e': key.e, 'd': key.d, 'p': key.p, 'q': key.q}])


def cmd_rsa_encrypt(args, settings: Settings) -> str:
    return _emit(args, [{'c': encrypt((args.n, args.e), args.m)}])


def cmd_rsa_decrypt(args, settings: Settings) -> str:
    return _emit(args, [{'m': decrypt(args.d, args.n, args.c)}])


def cmd_rsa_break(args, settings: Settings) -> str:
    max_steps = args.max_steps if args.max_steps is not None else settings.break_max_steps
    recovered = break_key((args.n, args.e), FactoringBudget(max_steps=max_steps), args.seed)
    row = {'d': recovered.d, 'p': recovered.p, 'q': recovered.q, 'phi': recovered.phi}
    if args.c is not None:
        row['m'] = decrypt(recovered.d, args.n, args.c)
    return _emit(args, [row])


def cmd_bench_factor(args, settings: Settings) -> str:
    timeout = args.timeout if args.timeout is not None else settings.bench_timeout_seconds
    workers = args.workers if args.workers is not None else settings.bench_workers
    report = benchmark_factoring(args.sizes, args.trials, args.algorithm, args.seed, timeout, workers)
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / 'samples.csv').write_text(report.samples_csv(), encoding='utf-8')
        (out / 'summary.json').write_text(render_json(report.summary()), encoding='utf-8')
        logger.info(f"Wrote benchmark samples and summary to {out}")
    if args.format == 'csv':
        return report.samples_csv()
    if args.format == 'json':
        return render_json({'summary': report.summary(), 'samples': [s.to_dict() for s in report.samples]})
    rows = []
    for bits in sorted({s.bits for s in report.samples}):
        sized = [s for s in report.samples if s.bits == bits]
        rows.append({
            'bits': bits,
            'trials': len(sized),
            'timeouts': sum(1 for s in sized if s.timed_out),
            'median_seconds': report.medians.get(bits),
        })
    summary = report.summary()
    fit_row = {'algorithm': report.algorithm, 'slope': summary['slope'], 'r2': summary['r2']}
    return render_rows(rows, None, 'table') + '\n' + render_rows([fit_row], None, 'table')


# --------------------------------------------------------------------------
# parser

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Options accepted before or after the subcommand."""
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument('--format', choices=FORMATS, default=default, help="Output format (default: table).")
    parser.add_argument('--seed', type=int, default=default, help="Seed for every random choice (default: 0).")
    parser.add_argument('--records-file', default=default, help="Factoring-record CSV (default: bundled dataset).")
    parser.add_argument('--config', default=default, help="JSON settings file.")
    parser.add_argument('--verbose', action='store_true', default=default, help="Log at INFO level.")
    parser.add_argument('--debug', action='store_true', default=default, help="Log at DEBUG level.")


def _model_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--baseline-bits', type=int, help="Bit length of the reference factoring (default: 512).")
    parser.add_argument('--baseline-hours', type=float, help="Wall hours of the reference factoring (default: 4).")
    parser.add_argument('--baseline-date', help="Date of the reference factoring, YYYY or YYYY-MM (default: 2015).")
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--doubling-months', type=float, help="Compute-power doubling period (default: 18).")
    group.add_argument('--preset', choices=sorted(PRESETS), help="Named doubling period.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='keylength',
        description="Estimate RSA key lengths from factoring effort and compute-power growth.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    model = argparse.ArgumentParser(add_help=False)
    _model_options(model)

    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('effort', parents=[common], help="NFS effort L for bit lengths.")
    p.add_argument('--bits', type=int, nargs='+', required=True)
    p.set_defaults(handler=cmd_effort)

    p = commands.add_parser('ratio', parents=[common], help="How much harder one bit length is than another.")
    p.add_argument('--target', type=int, required=True)
    p.add_argument('--baseline', type=int, default=512)
    p.set_defaults(handler=cmd_ratio)

    p = commands.add_parser('calibrate', parents=[common, model], help="Doubling period from two timed runs.")
    p.add_argument('--hours-early', type=float, required=True)
    p.add_argument('--hours-late', type=float, required=True)
    p.add_argument('--months', type=float, help="Months between the two runs.")
    p.add_argument('--from', dest='start', help="Date of the earlier run.")
    p.add_argument('--to', dest='end', help="Date of the later run.")
    p.set_defaults(handler=cmd_calibrate)

    p = commands.add_parser('estimate', parents=[common, model], help="Projected time to factor at a date.")
    p.add_argument('--bits', type=int, nargs='+', required=True)
    p.add_argument('--year', type=int)
    p.add_argument('--date', help="YYYY or YYYY-MM; overrides --year.")
    p.set_defaults(handler=cmd_estimate)

    p = commands.add_parser('min-bits', parents=[common, model], help="Smallest bit length for a lifespan.")
    p.add_argument('--from', dest='start', required=True, help="Protection start, YYYY or YYYY-MM.")
    p.add_argument('--lifespan', type=float, required=True, help="Protection lifespan in years.")
    p.add_argument('--margin', type=float)
    p.add_argument('--mode', choices=('end-of-life', 'cumulative-work'))
    p.add_argument('--round', action='store_true', default=None, help="Round up to a conventional modulus size.")
    p.add_argument('--cap', type=int, default=MAX_BITS, help="Largest bit length searched.")
    p.set_defaults(handler=cmd_min_bits)

    p = commands.add_parser('horizon', parents=[common, model], help="How long a bit length stays safe.")
    p.add_argument('--bits', type=int, required=True)
    p.add_argument('--from', dest='start', required=True)
    p.add_argument('--margin', type=float)
    p.set_defaults(handler=cmd_horizon)

    p = commands.add_parser('levels', parents=[common], help="Key sizes per security level.")
    p.add_argument('--family', help="rsa, dh, dsa, elgamal, ecdh, ecdsa, aes, ...")
    p.add_argument('--level', type=int)
    p.add_argument('--bits', type=int)
    p.set_defaults(handler=cmd_levels)

    p = commands.add_parser('policy', parents=[common], help="Agency minimum modulus for a use-until year.")
    p.add_argument('--year', type=int, required=True)
    p.set_defaults(handler=cmd_policy)

    p = commands.add_parser('tables', parents=[common, model], help="Reproduce a published table.")
    p.add_argument('--which', type=int, choices=sorted(TABLES), required=True)
    p.add_argument('--steps', type=int, default=TABLE7_START_ROWS, help="Rows of table 7.")
    p.add_argument('--baseline-minutes', type=float, default=TABLE8_BASELINE_MINUTES,
                   help="Hypothetical RSA-512 time for table 8.")
    p.set_defaults(handler=cmd_tables)

    records = commands.add_parser('records', help="Factoring-record dataset.").add_subparsers(
        dest='records_command', metavar='ACTION')
    records.required = True
    p = records.add_parser('load', parents=[common], help="Validate and list records.")
    p.set_defaults(handler=cmd_records_load)
    p = records.add_parser('fit', parents=[common], help="Exponential trend of factored bit lengths.")
    p.add_argument('--algorithm', help="Only fit records of one algorithm (MPQS, NFS).")
    p.add_argument('--predict', type=float, help="Year to evaluate the fitted trend at.")
    p.set_defaults(handler=cmd_records_fit)
    p = records.add_parser('extrapolate', parents=[common], help="MIPS-year extrapolations.")
    p.add_argument('--source', help="Record to extrapolate from.")
    p.add_argument('--target-bits', type=int)
    p.set_defaults(handler=cmd_records_extrapolate)

    rsa = commands.add_parser('rsa', help="Desk-scale textbook RSA.").add_subparsers(
        dest='rsa_command', metavar='ACTION')
    rsa.required = True
    p = rsa.add_parser('keygen', parents=[common])
    p.add_argument('--bits', type=int, required=True)
    p.set_defaults(handler=cmd_rsa_keygen)
    p = rsa.add_parser('encrypt', parents=[common])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--e', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.set_defaults(handler=cmd_rsa_encrypt)
    p = rsa.add_parser('decrypt', parents=[common])
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--c', type=int, required=True)
    p.set_defaults(handler=cmd_rsa_decrypt)
    p = rsa.add_parser('break', parents=[common], help="Recover d by factoring n.")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--e', type=int, required=True)
    p.add_argument('--c', type=int, help="Ciphertext to decrypt with the recovered key.")
    p.add_argument('--max-steps', type=int)
    p.set_defaults(handler=cmd_rsa_break)

    bench = commands.add_parser('bench', help="Factoring benchmarks.").add_subparsers(
        dest='bench_command', metavar='ACTION')
    bench.required = True
    p = bench.add_parser('factor', parents=[common], help="Time factorizations of random semiprimes.")
    p.add_argument('--sizes', type=int, nargs='+', default=[32, 40, 48])
    p.add_argument('--trials', type=int, default=5)
    p.add_argument('--algorithm', choices=ORACLE_NAMES, default='pollard_rho')
    p.add_argument('--timeout', type=float, help="Per-sample budget in seconds.")
    p.add_argument('--workers', type=int, help="Worker processes.")
    p.add_argument('--output-dir', help="Also write samples.csv and summary.json here.")
    p.set_defaults(handler=cmd_bench_factor)

    return parser


def configure_logging(verbose: bool = False, debug: bool = False) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def _load_settings(args) -> Settings:
    settings = Settings.from_file(args.config) if args.config else Settings()
    args.format = args.format or settings.output_format
    args.seed = args.seed if args.seed is not None else settings.seed
    args.records_file = args.records_file or settings.records_file
    if not 0 <= args.seed <= MAX_SEED:
        raise InputError(f"seed must be an unsigned 64-bit integer, got {args.seed}")
    return settings


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, execute the subcommand and print its output.

    Returns:
        0 on success, 1 on a domain error, 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.verbose, args.debug)
    try:
        settings = _load_settings(args)
        logger.info(f"Application settings: {settings}")
        output = args.handler(args, settings)
    except (KeylengthError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    sys.stdout.write(output)
    return EXIT_OK
