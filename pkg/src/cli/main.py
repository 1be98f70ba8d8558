"""
Numeration Toolkit - Command Line Interface

Exact-text front end to every package: CFE digits, alpha-numeration encoding
and decoding, complements, three-distance spectra, horizons, best
approximations, counting, orbits and the batch sweeps.

Key Features:
- One subcommand per operation, exact values in and out
- --json output {"query", "result", "witness", "oracle_match"}
- --oracle cross-check against the brute-force oracles (MATCH / MISMATCH)
- --digits K for explicit truncation of infinite digit streams
- --approx decimal display through mpmath

Exit codes: 0 success, 1 numeration error or oracle mismatch, 2 usage or
parse error. Diagnostics go to stderr as "error[<category>]: <message>".
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import structlog
from mpmath import nstr

from src.cfe.cfe_core import (
    best_rational_between,
    cfe_of,
    cfe_value,
    format_cfe,
    parse_cfe,
    period_of,
    semiconvergents
)
from src.config.log_setup import setup_logging
from src.config.settings import LOG_LEVELS, settings
from src.dynamics.germs import germ_successor, germ_value
from src.dynamics.skew_product import skew_orbit
from src.errors.error_handling_system import ExpressionParseError, NumerationError
from src.exact_numbers.exact_real import INFINITY, ExactReal, as_exact, to_mpf
from src.exact_numbers.expression_parser import format_exact, parse_exact
from src.kronecker.counting import count_below_or_equal_with_witness, count_below_with_witness
from src.kronecker.diophantine import (
    best_alpha_approximations,
    best_sided_alpha_approximations,
    floors_match_horizon
)
from src.kronecker.three_distance import three_distance
from src.numeration.digit_word import DigitWord, Tail, format_word, parse_word, word_to_json
from src.numeration.numeration import lambda_stream, lambda_tilde_inv, lambda_value
from src.oracles.brute_force import (
    oracle_best_alpha,
    oracle_best_rational,
    oracle_cfe_digits,
    oracle_cfe_value,
    oracle_count,
    oracle_floor_horizon,
    oracle_gaps,
    oracle_psi_rank,
    oracle_real_prefix,
    oracle_records,
    oracle_semiconvergents,
    oracle_signed_index,
    oracle_word_point
)
from src.signed_numeration.complement import (
    cfe_complement,
    conversion_steps,
    l_alpha,
    psi_signed,
    psi_signed_inv
)
from src.workflows.batch_sweep_processor import SWEEP_KINDS, BatchSweepProcessor, export_to_csv

logger = structlog.get_logger().bind(component="cli")


class UsageError(Exception):
    """A flag combination argparse cannot reject by itself"""


@dataclass
class Command:
    name: str
    args: argparse.Namespace
    output_format: str = "text"


@dataclass
class Outcome:
    result: Any
    lines: List[str] = field(default_factory=list)
    witness: Any = None
    oracle_match: Optional[bool] = None


# Formatting helpers

def _jsonable(value):
    if isinstance(value, ExactReal):
        return format_exact(value)
    if isinstance(value, Fraction):
        return format_exact(as_exact(value))
    if isinstance(value, DigitWord):
        return word_to_json(value)
    if value is INFINITY:
        return "inf"
    if isinstance(value, dict):
        return {key: _jsonable(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _show(value, args) -> str:
    """Exact text, followed by a decimal when --approx is set"""
    if isinstance(value, Fraction):
        value = as_exact(value)
    text = format_exact(value) if isinstance(value, ExactReal) else str(value)
    if args.approx and isinstance(value, ExactReal):
        text += f"  ~ {nstr(to_mpf(value, settings.stream.sanity_bits), settings.stream.display_digits)}"
    return text


def _require_digits(args, what: str) -> int:
    if args.digits is None:
        raise UsageError(f"{what} has an infinite digit stream; pass --digits K")
    return args.digits


# Subcommands

def _cmd_cfe(args) -> Outcome:
    x = parse_exact(args.x)
    if x.is_rational:
        digits = cfe_of(x).finite_digits()
        match = oracle_cfe_digits(x) == digits if args.oracle else None
        return Outcome({"digits": digits, "truncated": False}, [format_cfe(digits)], oracle_match=match)
    if args.period:
        pre, period = period_of(x)
        text = f"[{pre[0]};" + ",".join([str(t) for t in pre[1:]] + ["(" + ",".join(map(str, period)) + ")"]) + "]"
        match = None
        if args.oracle:
            unrolled = list(pre) + list(period) * 3
            match = oracle_cfe_digits(x, len(unrolled)) == unrolled
        return Outcome({"preperiod": pre, "period": period}, [text], oracle_match=match)
    digits = cfe_of(x).take(_require_digits(args, "an irrational CFE"))
    match = oracle_cfe_digits(x, len(digits)) == digits if args.oracle else None
    return Outcome({"digits": digits, "truncated": True}, [format_cfe(digits)[:-1] + ",...]"], oracle_match=match)


def _word_value(alpha, word: DigitWord) -> ExactReal:
    return lambda_value(alpha, word) if word.tail is Tail.ZEROS else l_alpha(alpha, word)


def _point_matches(alpha, word: DigitWord, value: ExactReal) -> bool:
    return oracle_word_point(alpha, word.digits, word.tail.value) == value.frac()


def _cmd_value(args) -> Outcome:
    if args.cfe is not None:
        digits = parse_cfe(args.cfe)
        value = cfe_value(digits)
        match = oracle_cfe_value(digits) == value if args.oracle else None
        return Outcome(value, [_show(value, args)], oracle_match=match)
    if args.alpha is None or args.word is None:
        raise UsageError("value needs a CFE list or --alpha with --word")
    alpha = parse_exact(args.alpha)
    word = parse_word(alpha, args.word)
    value = _word_value(alpha, word)
    match = _point_matches(alpha, word, value) if args.oracle else None
    return Outcome(value, [_show(value, args)], oracle_match=match)


def _cmd_encode(args) -> Outcome:
    alpha = parse_exact(args.alpha)
    if args.int is not None:
        n = args.int
        word = psi_signed_inv(alpha, n)
        match = None
        if args.oracle:
            match = (oracle_signed_index(alpha, word.digits, word.tail.value) == n
                     and _word_value(alpha, word).frac() == (alpha * n).frac())
            if alpha.is_rational and n >= 0:
                match = match and oracle_psi_rank(alpha, word.digits) == n
        return Outcome(word, [format_word(word)], oracle_match=match)

    beta = parse_exact(args.real)
    if alpha.is_rational and not (beta * alpha.a.denominator).is_integer:
        # off the 1/q grid: grid word below beta plus eps = {q beta}
        word, eps = lambda_tilde_inv(alpha, beta)
        match = None
        if args.oracle:
            match = oracle_word_point(alpha, word.digits) + eps / alpha.a.denominator == beta
        line = f"{format_word(word)} eps={_show(eps, args)}"
        return Outcome({"word": word, "eps": eps}, [line], oracle_match=match)
    stream = lambda_stream(alpha, beta)
    digits = stream.take(args.digits or settings.stream.display_digits)
    if stream.terminated:
        word = DigitWord(alpha, tuple(digits))
        match = oracle_word_point(alpha, word.digits) == beta if args.oracle else None
        return Outcome(word, [format_word(word)], oracle_match=match)
    _require_digits(args, "beta")
    text = "(" + ",".join(map(str, digits)) + ",...)"
    match = oracle_real_prefix(alpha, beta, digits) if args.oracle else None
    return Outcome({"digits": digits, "truncated": True}, [text], oracle_match=match)


def _cmd_decode(args) -> Outcome:
    alpha = parse_exact(args.alpha)
    word = parse_word(alpha, args.word)
    if args.real:
        value = _word_value(alpha, word)
        match = _point_matches(alpha, word, value) if args.oracle else None
        return Outcome(value, [_show(value, args)], oracle_match=match)
    n = psi_signed(alpha, word)
    match = None
    if args.oracle:
        match = oracle_signed_index(alpha, word.digits, word.tail.value) == n
        if alpha.is_rational and word.tail is Tail.ZEROS:
            match = match and oracle_psi_rank(alpha, word.digits) == n
    return Outcome(n, [str(n)], oracle_match=match)


def _cmd_complement(args) -> Outcome:
    alpha = parse_exact(args.alpha)
    word = parse_word(alpha, args.word)
    result = cfe_complement(alpha, word)
    lines = [format_word(result)]
    witness = None
    if args.steps:
        steps = list(conversion_steps(alpha, word))
        witness = [word_to_json(step) for step in steps]
        lines = [f"{k}: {format_word(step)}" for k, step in enumerate(steps)] + lines
    match = None
    if args.oracle:
        codes = (oracle_signed_index(alpha, word.digits, word.tail.value)
                 + oracle_signed_index(alpha, result.digits, result.tail.value))
        match = codes == 0 and l_alpha(alpha, word) + l_alpha(alpha, result) == 1
    return Outcome(result, lines, witness, match)


def _cmd_three_distance(args) -> Outcome:
    alpha = parse_exact(args.alpha)
    spectrum = three_distance(alpha, args.n)
    lines = [f"{_show(length, args)} x{count}" for length, count in spectrum.lengths]
    witness = {
        "predicted": spectrum.predicted,
        "s": spectrum.s,
        "i": spectrum.i,
        "two_valued": spectrum.two_valued,
        "matches": spectrum.matches,
    }
    match = oracle_gaps(alpha, args.n) == spectrum.lengths if args.oracle else None
    return Outcome([[length, count] for length, count in spectrum.lengths], lines, witness, match)


def _cmd_horizon(args) -> Outcome:
    alpha, alpha2 = parse_exact(args.alpha), parse_exact(args.alpha2)
    horizon = floors_match_horizon(alpha, alpha2)
    match = oracle_floor_horizon(alpha, alpha2) == horizon if args.oracle else None
    return Outcome(horizon, [str(horizon)], oracle_match=match)


def _cmd_best_approx(args) -> Outcome:
    alpha, beta = parse_exact(args.alpha), parse_exact(args.beta)
    if args.side == "both":
        found = best_alpha_approximations(alpha, beta, args.n_max)
        expected = oracle_best_alpha(alpha, beta, args.n_max) if args.oracle else None
    else:
        found = best_sided_alpha_approximations(alpha, beta, args.side, args.n_max)
        expected = oracle_records(alpha, beta, args.side, args.n_max) if args.oracle else None
    match = None if expected is None else expected == found
    return Outcome(found, [" ".join(map(str, found))], oracle_match=match)


def _cmd_count(args) -> Outcome:
    alpha, beta = parse_exact(args.alpha), parse_exact(args.beta)
    if args.inclusive:
        outcome = count_below_or_equal_with_witness(alpha, beta, args.nu)
    else:
        outcome = count_below_with_witness(alpha, beta, args.nu)
    rows = [
        {"i": row.i, "b": row.b, "n": row.n, "nu": row.nu, "nu_recurrence": row.nu_recurrence,
         "tau": row.tau, "eps": row.eps, "eps_prime": row.eps_prime, "term": row.term}
        for row in outcome.witness.rows
    ]
    witness = {"s": outcome.witness.s, "rows": rows, "correction": outcome.witness.correction}
    match = None
    if args.oracle:
        match = oracle_count(alpha, beta, args.nu, inclusive=args.inclusive) == outcome.count
    return Outcome(outcome.count, [str(outcome.count)], witness, match)


def _cmd_orbit(args) -> Outcome:
    alpha = parse_exact(args.alpha)
    element = parse_word(alpha, args.start) if args.start else DigitWord(alpha)
    start_value = germ_value(alpha, element)
    trace, lines = [], []
    match = True if args.oracle else None
    for k in range(args.steps + 1):
        value = germ_value(alpha, element)
        trace.append({"k": k, "word": element, "value": value})
        lines.append(f"{k} {format_word(element)} {_show(value, args)}")
        if args.oracle and value != (start_value + alpha * k).frac():
            match = False
        if k < args.steps:
            element = germ_successor(alpha, element)
    return Outcome(trace, lines, oracle_match=match)


def _cmd_skew(args) -> Outcome:
    alpha, beta = parse_exact(args.alpha), parse_exact(args.beta)
    trace, lines = [], []
    points = list(skew_orbit(alpha, beta, args.steps))
    for point in points:
        trace.append({"k": point.k, "digits": list(point.digits), "x": point.state.x,
                      "y": point.state.y, "exhausted": point.exhausted})
        lines.append(f"{point.k} ({point.digits[0]},{point.digits[1]}) {_show(point.state.y, args)}")
    match = None
    if args.oracle:
        count = len(points)
        match = [point.digits[0] for point in points] == oracle_cfe_digits(alpha, count + 1)[1:count + 1]
        # the y digits are Lambda digits only for beta inside the numeration's domain
        try:
            expected_b = lambda_stream(alpha, beta).take(count)
        except NumerationError:
            expected_b = None
        if expected_b is not None:
            match = match and [point.digits[1] for point in points] == expected_b
    return Outcome(trace, lines, oracle_match=match)


def _cmd_semiconvergents(args) -> Outcome:
    x = parse_exact(args.x)
    found = semiconvergents(x, args.max_denominator)
    match = oracle_semiconvergents(x, args.max_denominator) == found if args.oracle else None
    return Outcome(found, [" ".join(_show(f, args) for f in found)], oracle_match=match)


def _cmd_best_rational(args) -> Outcome:
    theta, theta2 = parse_exact(args.theta), parse_exact(args.theta2)
    best = best_rational_between(theta, theta2)
    match = None
    if args.oracle:
        match = oracle_best_rational(theta, theta2, settings.oracle.max_scan_denominator) == best
    return Outcome(best, [_show(best, args)], oracle_match=match)


def _cmd_sweep(args) -> Outcome:
    processor = BatchSweepProcessor(limit=args.limit)
    report = processor.run(args.kind)
    output = args.output
    if output is None and args.save:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        output = settings.batch.output_dir / f"{args.kind}_sweep_{timestamp}.csv"
    if output:
        path = export_to_csv(report.rows, output)
        logger.info("sweep_saved", path=str(path))
    lines = [f"{key}: {value}" for key, value in report.summary.items()]
    errors = processor.error_handler.get_error_summary()
    return Outcome(report.summary, lines, errors, oracle_match=report.mismatches == 0)


COMMANDS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "cfe": _cmd_cfe,
    "value": _cmd_value,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "complement": _cmd_complement,
    "three-distance": _cmd_three_distance,
    "horizon": _cmd_horizon,
    "best-approx": _cmd_best_approx,
    "count": _cmd_count,
    "orbit": _cmd_orbit,
    "skew": _cmd_skew,
    "semiconvergents": _cmd_semiconvergents,
    "best-rational": _cmd_best_rational,
    "sweep": _cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON document")
    common.add_argument("--oracle", action="store_true", help="Cross-check with the brute-force oracle")
    common.add_argument("--digits", type=int, default=None, help="Truncate infinite digit streams to K digits")
    common.add_argument("--approx", action="store_true", help="Show decimal approximations next to exact values")
    common.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=settings.log_level,
                        help="Log level for stderr diagnostics")

    parser = argparse.ArgumentParser(
        prog="numeration",
        description="Exact alpha-numeration toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cfe", parents=[common], help="CFE digits of an exact number")
    p.add_argument("x")
    p.add_argument("--period", action="store_true", help="Show the eventual period of a quadratic")

    p = sub.add_parser("value", parents=[common], help="Evaluate a CFE list or a digit word")
    p.add_argument("cfe", nargs="?")
    p.add_argument("--alpha")
    p.add_argument("--word")

    p = sub.add_parser("encode", parents=[common], help="Digits of an integer (Psi) or a real (Lambda)")
    p.add_argument("--alpha", required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--int", type=int)
    target.add_argument("--real")

    p = sub.add_parser("decode", parents=[common], help="Integer (or real with --real) coded by a word")
    p.add_argument("--alpha", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--real", action="store_true")

    p = sub.add_parser("complement", parents=[common], help="CFE-complement of a word")
    p.add_argument("--alpha", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--steps", action="store_true", help="Show every conversion step")

    p = sub.add_parser("three-distance", parents=[common], help="Gap spectrum of {k alpha}, k < N")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("horizon", parents=[common], help="Horizon of equal floors for two slopes")
    p.add_argument("--alpha", required=True)
    p.add_argument("--alpha2", required=True)

    p = sub.add_parser("best-approx", parents=[common], help="Best alpha-approximations of beta")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--side", choices=("left", "right", "both"), default="both")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("count", parents=[common], help="#{k < nu : {k alpha} < beta}")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--inclusive", action="store_true", help="Count k <= nu with {k alpha} <= beta")

    p = sub.add_parser("orbit", parents=[common], help="Germ-successor trace")
    p.add_argument("--alpha", required=True)
    p.add_argument("--start", help="Starting word (default: the zero word)")
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("skew", parents=[common], help="Skew-product trace from (alpha, beta)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("semiconvergents", parents=[common], help="Semi-convergents up to a denominator")
    p.add_argument("x")
    p.add_argument("--max-denominator", type=int, required=True)

    p = sub.add_parser("best-rational", parents=[common], help="Least-denominator rational between two reals")
    p.add_argument("theta")
    p.add_argument("theta2")

    p = sub.add_parser("sweep", parents=[common], help="Formula-vs-oracle sweep")
    p.add_argument("kind", choices=SWEEP_KINDS)
    p.add_argument("--output", help="CSV file for per-instance rows")
    p.add_argument("--save", action="store_true", help="Write a timestamped CSV under NUMERATION_OUTPUT_DIR")
    p.add_argument("--limit", type=int, default=200)

    return parser


def _emit(command: Command, outcome: Outcome):
    if command.output_format == "json":
        query = {key: value for key, value in vars(command.args).items()
                 if key not in ("json", "log_level")}
        document = {
            "query": query,
            "result": _jsonable(outcome.result),
            "witness": _jsonable(outcome.witness),
            "oracle_match": outcome.oracle_match,
        }
        print(json.dumps(document))
        return
    for line in outcome.lines:
        print(line)
    if command.args.oracle:
        if outcome.oracle_match is None:
            print("oracle: n/a")
        else:
            print("oracle: MATCH" if outcome.oracle_match else "oracle: MISMATCH")


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.log_level)
    command = Command(args.command, args, "json" if args.json else "text")
    logger.debug("command_start", command=command.name)

    try:
        outcome = COMMANDS[command.name](args)
    except UsageError as e:
        print(f"error[usage]: {e}", file=sys.stderr)
        return 2
    except ExpressionParseError as e:
        print(f"error[{e.category.value}]: {e}", file=sys.stderr)
        return 2
    except NumerationError as e:
        print(f"error[{e.category.value}]: {e}", file=sys.stderr)
        return 1

    _emit(command, outcome)
    if command.name == "sweep" or command.args.oracle:
        return 0 if outcome.oracle_match in (True, None) else 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
