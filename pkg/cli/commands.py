"""
Command-line front end.

Exit codes: 0 computed, 1 property violated (sweep or selftest), 2 usage
error, 3 a budget or solver limit fired.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional
import logging

from core.braid_core import parse_braid, self_linking
from core.config import get_config
from core.constants import (
    APP_NAME, EXIT_ABORTED, EXIT_OK, EXIT_PROPERTY_VIOLATED, EXIT_USAGE, GRID_LAYOUTS,
    LAYOUT_ISOLATED, VERSION,
)
from core.dehornoy import dehornoy_floor, equals, fdtc_bounds, less, order_sign
from core.file_io import GridIO, read_text_input
from core.grid import braid_to_grid, grid_self_linking, render_ascii, to_json
from core.gridhf import (
    SolverLimits, braid_theta_nonvanishing, theta_bigrading, theta_nonvanishing,
)
from core.logging_config import log_command, log_error_with_context
from core.models import BraidWord, MurasugiForm, MurasugiVariant, ThetaStatus
from core.rv import SearchBudget, murasugi_classify_rv, rv_status
from core.validation import InputValidator, LimitExceeded, ValidationError

from cli.selftest import SELFTEST_GROUPS, run_selftest
from cli.sweep import SWEEPS, run_sweeps

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """argparse refused the command line"""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting"""

    def error(self, message: str):
        raise UsageError(message)


def _emit(args: argparse.Namespace, text: str, data: Dict[str, Any]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _word(args: argparse.Namespace, attribute: str = 'word') -> BraidWord:
    text = getattr(args, attribute)
    if text == "-":
        text = read_text_input("-")
    return parse_braid(text, args.strands)


def _limits(args: argparse.Namespace) -> SolverLimits:
    defaults = SolverLimits.from_config()
    return SolverLimits(
        n_max=args.n_max if args.n_max is not None else defaults.n_max,
        max_matrix_entries=(args.max_entries if args.max_entries is not None
                            else defaults.max_matrix_entries),
    )


# ---------------------------------------------------------------- verbs

def cmd_sign(args: argparse.Namespace) -> int:
    sign = order_sign(_word(args))
    _emit(args, sign.value, {'sign': sign.value})
    return EXIT_OK


def cmd_cmp(args: argparse.Namespace) -> int:
    a, b = _word(args, 'a'), _word(args, 'b')
    if less(a, b):
        relation = "<"
    elif less(b, a):
        relation = ">"
    else:
        relation = "="
    _emit(args, relation, {'relation': relation})
    return EXIT_OK


def cmd_eq(args: argparse.Namespace) -> int:
    result = equals(_word(args, 'a'), _word(args, 'b'))
    _emit(args, "true" if result else "false", {'equal': result})
    return EXIT_OK


def cmd_floor(args: argparse.Namespace) -> int:
    floor = dehornoy_floor(_word(args))
    _emit(args, str(floor), {'floor': floor})
    return EXIT_OK


def cmd_fdtc(args: argparse.Namespace) -> int:
    depth = args.depth if args.depth is not None else get_config().dehornoy.default_fdtc_depth
    bounds = fdtc_bounds(_word(args), depth)
    _emit(args, str(bounds), {
        'lower': str(bounds.lower),
        'upper': str(bounds.upper),
        'depth': bounds.depth,
    })
    return EXIT_OK


def cmd_sl(args: argparse.Namespace) -> int:
    sl = self_linking(_word(args))
    _emit(args, str(sl), {'sl': sl})
    return EXIT_OK


def cmd_grid(args: argparse.Namespace) -> int:
    grid = braid_to_grid(_word(args), args.layout)
    if args.output:
        GridIO.save_json(grid, args.output)
        return EXIT_OK
    if args.ascii:
        print(render_ascii(grid))
    else:
        print(to_json(grid))
    return EXIT_OK


def cmd_theta(args: argparse.Namespace) -> int:
    limits = _limits(args)
    if args.grid:
        grid = GridIO.load_json(args.grid)
        result = theta_nonvanishing(grid, limits)
        sl = grid_self_linking(grid)
    else:
        if args.word is None or args.strands is None:
            raise ValidationError("theta needs -n and a braid word, or --grid")
        word = _word(args)
        result = braid_theta_nonvanishing(word, limits)
        grid = braid_to_grid(word, LAYOUT_ISOLATED)
        sl = self_linking(word)

    grading = theta_bigrading(grid)
    data: Dict[str, Any] = {
        'status': result.status.value,
        'maslov': grading.maslov,
        'alexander2': grading.alexander2,
        'sl': sl,
    }
    if result.status is ThetaStatus.NONZERO:
        data['reason'] = result.reason.value
    elif result.status is ThetaStatus.ZERO:
        data['witness_size'] = len(result.witness)
    else:
        data['limit'] = result.limit
    _emit(args, str(result), data)
    return EXIT_ABORTED if result.status is ThetaStatus.ABORTED else EXIT_OK


def _search_budget(args: argparse.Namespace) -> SearchBudget:
    budget = SearchBudget.from_config()
    radius = args.radius if args.radius is not None else budget.radius
    return SearchBudget(
        radius=radius,
        escalation_radius=max(radius, budget.escalation_radius),
        step_budget=budget.step_budget,
        solver_limits=_limits(args),
    )


def cmd_rv(args: argparse.Namespace) -> int:
    verdict = rv_status(_word(args), _search_budget(args))
    _emit(args, str(verdict), verdict.to_dict())
    return EXIT_OK


def _murasugi_form(args: argparse.Namespace) -> MurasugiForm:
    """--params is the a-vector for variant a and the exponent m for b and c"""
    variant = MurasugiVariant(args.variant)
    params = tuple(InputValidator.parse_letters(" ".join(args.params)))
    if variant is MurasugiVariant.A:
        return MurasugiForm(variant, args.d, a=params)
    if len(params) != 1:
        raise ValidationError(f"Variant {variant.value} takes one parameter m, got {list(params)}")
    return MurasugiForm(variant, args.d, m=params[0])


def cmd_murasugi(args: argparse.Namespace) -> int:
    form = _murasugi_form(args)
    verdict = murasugi_classify_rv(form)
    data = verdict.to_dict()
    data['form'] = form.describe()
    data['word'] = list(verdict.word.letters)
    _emit(args, f"{form.describe()} [{verdict.word.to_text()}]: {verdict}", data)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    names = args.only or list(SWEEPS)

    def show(report) -> None:
        if not args.json:
            print(report)
            sys.stdout.flush()

    reports = run_sweeps(names, seed=args.seed, progress=show)
    if args.json:
        print(json.dumps({'reports': [report.to_dict() for report in reports]}, sort_keys=True))
    if any(report.mismatches for report in reports):
        return EXIT_PROPERTY_VIOLATED
    if any(report.aborted for report in reports):
        return EXIT_ABORTED
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(args.only)
    failed = [result for result in results if not result.passed]
    if args.json:
        print(json.dumps({
            'passed': len(results) - len(failed),
            'failed': [str(result) for result in failed],
        }, sort_keys=True))
    else:
        for result in results:
            print(result)
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_PROPERTY_VIOLATED if failed else EXIT_OK


# ---------------------------------------------------------------- grammar

def _add_json(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a --json given before the verb
    parser.add_argument('--json', action='store_true', default=argparse.SUPPRESS,
                        help="machine-readable output")


def _add_word(parser: argparse.ArgumentParser, *names: str) -> None:
    parser.add_argument('-n', '--strands', type=int, required=True, help="number of strands")
    for name in names:
        parser.add_argument(name, help="braid letters, e.g. \"1 -2 1\" (or - for stdin)")


def _add_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--n-max', type=int, default=None, help="largest grid the solver accepts")
    parser.add_argument('--max-entries', type=int, default=None, help="boundary matrix entry cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=APP_NAME, description="Braid orders, grid diagrams and theta-hat")
    parser.add_argument('--version', action='version', version=f"{APP_NAME} {VERSION}")
    parser.add_argument('--json', action='store_true', help="machine-readable output")
    parser.add_argument('-v', '--verbose', action='store_true', help="log at INFO level")
    verbs = parser.add_subparsers(dest='verb', parser_class=_Parser)
    verbs.required = True
    add_verb = verbs.add_parser

    def verb_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = add_verb(name, help=help_text)
        _add_json(sub)
        return sub

    sign = verb_parser('sign', "Dehornoy sign of a braid")
    _add_word(sign, 'word')
    sign.set_defaults(handler=cmd_sign)

    cmp_ = verb_parser('cmp', "compare two braids in Dehornoy's order")
    _add_word(cmp_, 'a', 'b')
    cmp_.set_defaults(handler=cmd_cmp)

    eq = verb_parser('eq', "decide whether two words are the same braid")
    _add_word(eq, 'a', 'b')
    eq.set_defaults(handler=cmd_eq)

    floor = verb_parser('floor', "Dehornoy floor")
    _add_word(floor, 'word')
    floor.set_defaults(handler=cmd_floor)

    fdtc = verb_parser('fdtc', "bounds on the fractional Dehn twist coefficient")
    _add_word(fdtc, 'word')
    fdtc.add_argument('--depth', type=int, default=None, help="power used for the bound")
    fdtc.set_defaults(handler=cmd_fdtc)

    sl = verb_parser('sl', "self-linking number of the closure")
    _add_word(sl, 'word')
    sl.set_defaults(handler=cmd_sl)

    grid = verb_parser('grid', "grid diagram of the closure")
    _add_word(grid, 'word')
    grid.add_argument('--layout', choices=GRID_LAYOUTS, default=LAYOUT_ISOLATED)
    grid.add_argument('--ascii', action='store_true', help="draw the grid")
    grid.add_argument('-o', '--output', default=None, help="write grid JSON to a file")
    grid.set_defaults(handler=cmd_grid)

    theta = verb_parser('theta', "decide whether theta-hat vanishes")
    theta.add_argument('-n', '--strands', type=int, default=None, help="number of strands")
    theta.add_argument('word', nargs='?', default=None, help="braid letters")
    theta.add_argument('--grid', default=None, help="grid JSON file (or - for stdin)")
    _add_limits(theta)
    theta.set_defaults(handler=cmd_theta)

    rv = verb_parser('rv', "right-veering certificate")
    _add_word(rv, 'word')
    rv.add_argument('--radius', type=int, default=None, help="conjugator search radius")
    _add_limits(rv)
    rv.set_defaults(handler=cmd_rv)

    murasugi = verb_parser('murasugi', "classify a Murasugi normal form")
    murasugi.add_argument('--variant', required=True, choices=[v.value for v in MurasugiVariant])
    murasugi.add_argument('-d', '--d', dest='d', type=int, default=0, help="power of the full twist h")
    murasugi.add_argument('--params', nargs='+', required=True,
                          help="exponents a_i for variant a (e.g. 1 2), m for variants b and c")
    murasugi.set_defaults(handler=cmd_murasugi)

    sweep = verb_parser('sweep', "cross-validation sweeps")
    sweep.add_argument('--seed', type=int, default=None, help="random seed (default from config)")
    sweep.add_argument('--only', action='append', choices=SWEEPS, default=None)
    sweep.set_defaults(handler=cmd_sweep)

    selftest = verb_parser('selftest', "golden checks")
    selftest.add_argument('--only', action='append', choices=SELFTEST_GROUPS, default=None)
    selftest.set_defaults(handler=cmd_selftest)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the verb and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"{APP_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_OK

    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)
        for handler in logging.getLogger().handlers:
            handler.setLevel(logging.INFO)

    log_command(args.verb, {k: v for k, v in vars(args).items() if k not in ('handler', 'verb')})
    try:
        return args.handler(args)
    except ValidationError as e:
        print(f"{APP_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as e:
        print(f"{APP_NAME}: aborted ({e.limit}): {e}", file=sys.stderr)
        return EXIT_ABORTED
    except (FileNotFoundError, IOError) as e:
        print(f"{APP_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        log_error_with_context(e, f"running {args.verb}", {'argv': argv})
        raise
