import argparse
import json
import logging
import sys
import time
import traceback
from typing import Dict, List, Optional

from config import LOG_FORMAT, SKEWHOOK_SEED, HG_RANDOM_COUNT
from errors import PreconditionError, SkewHookError
from counting_lib import f_hlf, f_minimal, f_nhlf, f_oof
from excited_lib import enumerate_excited, enumerate_ne_excited, excited_array
from hillman_grassl_lib import RppLambda, WeightArray, hg_forward, hg_inverse
from phi_lib import phi, phi_inverse
from print_output_lib import (
    array_from_json,
    diagram_from_json,
    load_json_file,
    print_listing,
    render_ascii,
    tableau_from_json,
    to_json_text,
)
from shape_lib import SkewShape, is_connected
from tableau_lib import count_syt, enumerate_flagged_skew, enumerate_min_via_moves, enumerate_oot
from verify_lib import SUITES, SuiteOptions, run_on_shape, run_sweep

logger = logging.getLogger(__name__)

ENUMERATIONS = {
    'excited': enumerate_excited,
    'ssyt-min': enumerate_min_via_moves,
    'sf': enumerate_flagged_skew,
    'oot': enumerate_oot,
    'broken': lambda s: [excited_array(d) for d in enumerate_excited(s)],
    'ne-excited': enumerate_ne_excited,
}

COUNT_METHODS = ['brute', 'hlf', 'nhlf', 'oof', 'minimal']


# --- Argument Parsing ---

def _add_shape_arguments(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument('--outer', required=required, help='Outer partition, comma separated (e.g. 5,5,3,3,2)')
    p.add_argument('--inner', default='', help='Inner partition, comma separated (default: empty)')


def _add_format_argument(p: argparse.ArgumentParser):
    p.add_argument('--format', choices=['json', 'ascii'], default='json', help='Output format (default: json)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact enumeration and verification for skew shapes: excited diagrams,\n"
                    "minimal tableaux, Hillman-Grassl and hook-length formulas.",
        formatter_class=argparse.RawTextHelpFormatter
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='Log per-item detail (DEBUG)')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='Only log warnings and errors')

    subparsers = parser.add_subparsers(dest='command', help='Available Commands', required=True)

    # --- Command: enumerate ---
    parser_enum = subparsers.add_parser('enumerate', help='List the objects of one family in canonical order')
    parser_enum.add_argument('family', choices=sorted(ENUMERATIONS), help='Which family to enumerate')
    _add_shape_arguments(parser_enum)
    _add_format_argument(parser_enum)
    parser_enum.add_argument('--limit', type=int, default=None, help='Print at most N items (the count covers all)')

    # --- Command: count ---
    parser_count = subparsers.add_parser('count', help='Number of standard Young tableaux of a skew shape')
    _add_shape_arguments(parser_count)
    parser_count.add_argument('--method', choices=COUNT_METHODS + ['all'], default='all',
                              help='brute: corner-peeling oracle\n'
                                   'hlf: hook length formula (straight shapes)\n'
                                   'nhlf: sum over excited diagrams\n'
                                   'oof: sum over tableaux of the inner shape\n'
                                   'minimal: sum over minimal tableaux (connected shapes)\n'
                                   'all: every applicable method; exit 1 on disagreement')
    _add_format_argument(parser_count)

    # --- Command: verify ---
    parser_verify = subparsers.add_parser('verify', help='Run a verification suite on one shape or on a sweep')
    parser_verify.add_argument('suite', choices=sorted(SUITES), help='Which identity to check')
    _add_shape_arguments(parser_verify, required=False)
    parser_verify.add_argument('--sweep-max-size', type=int, default=None, metavar='K',
                               help='Sweep every shape with |lambda| <= K (default: per suite)')
    parser_verify.add_argument('--degree', type=int, default=None, help='q-series truncation degree')
    parser_verify.add_argument('--seed', type=int, default=SKEWHOOK_SEED, help=f'Random seed (default: {SKEWHOOK_SEED})')
    parser_verify.add_argument('--random-count', type=int, default=HG_RANDOM_COUNT,
                               help=f'Random round trips for hg-roundtrip (default: {HG_RANDOM_COUNT})')
    _add_format_argument(parser_verify)

    # --- Command: map ---
    parser_map = subparsers.add_parser('map', help='Apply Phi to a diagram file or its inverse to a tableau file')
    parser_map.add_argument('direction', choices=['phi', 'inverse'])
    parser_map.add_argument('--input', required=True, help='JSON file: a diagram for phi, a tableau for inverse')
    _add_format_argument(parser_map)

    # --- Command: hg ---
    parser_hg = subparsers.add_parser('hg', help='Hillman-Grassl map on an RPP file, or its inverse on an array file')
    parser_hg.add_argument('direction', choices=['apply', 'invert'])
    parser_hg.add_argument('--input', required=True, help='JSON file {"outer": [...], "values": [[...], ...]}')
    _add_format_argument(parser_hg)

    return parser


def configure_logging(args: argparse.Namespace):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


# --- Commands ---

def _emit(obj, fmt: str):
    print(to_json_text(obj) if fmt == 'json' else render_ascii(obj))


def _count_values(s: SkewShape, methods: List[str]) -> Dict[str, int]:
    evaluators = {
        'brute': count_syt,
        'hlf': lambda shape: f_hlf(shape.outer),
        'nhlf': f_nhlf,
        'oof': f_oof,
        'minimal': f_minimal,
    }
    return {m: evaluators[m](s) for m in methods}


def cmd_enumerate(args) -> int:
    s = SkewShape.parse(args.outer, args.inner)
    print_listing(ENUMERATIONS[args.family](s), args.format, args.limit)
    return 0


def cmd_count(args) -> int:
    s = SkewShape.parse(args.outer, args.inner)
    if args.method == 'hlf' and s.inner.parts:
        raise PreconditionError("--method hlf needs an empty inner shape")
    if args.method == 'all':
        methods = [m for m in COUNT_METHODS
                   if not (m == 'hlf' and s.inner.parts) and not (m == 'minimal' and not is_connected(s))]
    else:
        methods = [args.method]

    values = _count_values(s, methods)
    agree = len(set(values.values())) <= 1
    if args.format == 'json':
        print(json.dumps({"shape": s.to_json(), "counts": {m: str(v) for m, v in values.items()}, "agree": agree}))
    else:
        for m, v in values.items():
            print(f"{m:<8}: {v}" if len(values) > 1 else v)
    if not agree:
        print(f"Methods disagree on {s}: {values}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    options = SuiteOptions(degree=args.degree, seed=args.seed, random_count=args.random_count)
    if args.outer:
        report = run_on_shape(args.suite, SkewShape.parse(args.outer, args.inner), options)
    else:
        if args.inner:
            raise PreconditionError("--inner needs --outer")
        report = run_sweep(args.suite, args.sweep_max_size, options)
    _emit(report, args.format)
    return 0 if report.passed else 1


def cmd_map(args) -> int:
    data = load_json_file(args.input)
    if args.direction == 'phi':
        _emit(phi(diagram_from_json(data)), args.format)
    else:
        _emit(phi_inverse(tableau_from_json(data)), args.format)
    return 0


def cmd_hg(args) -> int:
    data = load_json_file(args.input)
    if args.direction == 'apply':
        _emit(hg_forward(array_from_json(data, RppLambda)), args.format)
    else:
        _emit(hg_inverse(array_from_json(data, WeightArray)), args.format)
    return 0


COMMANDS = {
    'enumerate': cmd_enumerate,
    'count': cmd_count,
    'verify': cmd_verify,
    'map': cmd_map,
    'hg': cmd_hg,
}


# --- Main Execution ---

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(args)

    start_time = time.time()
    try:
        code = COMMANDS[args.command](args)
    except SkewHookError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        print(f"An unexpected error occurred: {e}", file=sys.stderr)
        traceback.print_exc()
        return 1
    logger.info(f"--- {args.command} finished in {time.time() - start_time:.2f} seconds ---")
    return code


if __name__ == "__main__":
    sys.exit(main())
