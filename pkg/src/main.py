# src/main.py
import argparse
import json
import logging
import random
import sys
import time
from pathlib import Path
from typing import List, Optional

from src.arith.field import FieldTag
from src.config.config import config, APP_NAME, APP_VERSION
from src.errors import (AlphabetError, BudgetExceeded, DivisionByZero, FieldError, InfiniteFieldError,
                        MalformedInputError, MixedFieldError, NotPrimeError, ShapeError, VariantError)
from src.fpt import count_mk_dp, count_mk_dp_rows, min_k, smallest_row_bound
from src.reductions import TrialResult, discover_reductions, get_reduction
from src.utils.logger import TRACE_LEVEL_NUM, level_from_name, setup_logging
from src.vest import dump_json, load_instance, mk_bruteforce

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_BAD_INPUT = 4

METHODS = ("brute", "dp", "dp-rows")
INPUT_ERRORS = (MalformedInputError, ShapeError, AlphabetError, VariantError, FieldError, NotPrimeError,
                MixedFieldError, InfiniteFieldError, DivisionByZero, json.JSONDecodeError)


def _field(text: str) -> FieldTag:
    if text.lower() in ("q", "rational"):
        return FieldTag.rational()
    try:
        return FieldTag.prime(int(text))
    except (ValueError, NotPrimeError):
        raise argparse.ArgumentTypeError(f"field must be 'rational' or a prime, got {text!r}") from None


def _at_least(lowest: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < lowest:
            raise argparse.ArgumentTypeError(f"must be at least {lowest}, got {value}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m src.main", description=f"{APP_NAME} {APP_VERSION}: "
                                     "count and decide VEST instances, generate and check reductions.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for DEBUG, -vv for TRACE")
    parser.add_argument("--config", help="ini file to read instead of ./vest.ini")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default from config)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="run a reduction on a source instance")
    gen.add_argument("reduction")
    gen.add_argument("--in", dest="input", required=True)
    gen.add_argument("--k", type=_at_least(1), required=True)
    gen.add_argument("--style", choices=("counting", "decision"), default="counting")
    gen.add_argument("--field", type=_field, default=FieldTag.rational(), help="'rational' or a prime p")
    gen.add_argument("--out", help="instance JSON path; the certificate goes next to it as .cert.json")

    solve = sub.add_parser("solve", help="print M_k")
    solve.add_argument("--in", dest="input", required=True)
    solve.add_argument("--k", type=_at_least(0), default=None, help="defaults to the k stored in the instance")
    solve.add_argument("--method", choices=METHODS, default=None)
    solve.add_argument("--p", type=int, default=None, help="row bound for dp-rows")
    solve.add_argument("--budget", type=int, default=None)
    solve.add_argument("--trace", action="store_true", help="print the DP level sizes")

    mink = sub.add_parser("min-k", help="smallest k >= 1 with M_k > 0")
    mink.add_argument("--in", dest="input", required=True)
    mink.add_argument("--p", type=int, default=None)

    verify = sub.add_parser("verify-reduction", help="cross-check a reduction against the oracles")
    verify.add_argument("reduction", help="a reduction name or 'all'")
    verify.add_argument("--trials", type=_at_least(0), default=None)
    verify.add_argument("--max-size", type=_at_least(1), default=None)
    verify.add_argument("--seed", type=int, default=None)

    bench = sub.add_parser("bench", help="time brute force against the DP for k = 1..kmax")
    bench.add_argument("--in", dest="input", required=True)
    bench.add_argument("--kmax", type=_at_least(1), required=True)
    bench.add_argument("--budget", type=int, default=None)
    return parser


def _out(line: str = ""):
    print(line, flush=True)


def _known(name: str) -> bool:
    known = discover_reductions()
    if name not in known:
        logger.error(f"Unknown reduction '{name}', known: {', '.join(sorted(known))}")
        return False
    return True


def cmd_gen(args) -> int:
    if not _known(args.reduction):
        return EXIT_USAGE
    reduction = get_reduction(args.reduction)
    source = reduction.load_source(args.input)
    generated = reduction.generate(source, args.k, style=args.style, field=args.field)
    if args.out is None:
        _out(json.dumps(generated.payload, indent=2))
        return EXIT_OK
    cert_path = Path(args.out).with_suffix(".cert.json")
    dump_json(generated.payload, args.out)
    dump_json(generated.certificate.to_json(), str(cert_path))
    _out(f"instance: {args.out}")
    _out(f"certificate: {cert_path}")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst, stored_k = load_instance(args.input)
    k = args.k if args.k is not None else stored_k
    if k is None:
        raise MalformedInputError("no --k given and the instance stores none")
    method = args.method or config.default_method
    if method not in METHODS:
        raise MalformedInputError(f"unknown method {method!r} in config")
    budget = args.budget if args.budget is not None else config.budget
    trace = (lambda level, states, total: _out(f"level {level}: states={states}, total={total}")) \
        if args.trace else None

    started = time.perf_counter()
    if method == "brute":
        count = mk_bruteforce(inst, k, budget, threads=args.threads)
    elif method == "dp":
        count = count_mk_dp(inst, k, threads=args.threads, trace=trace)
    else:
        p = args.p if args.p is not None else smallest_row_bound(inst)
        logger.info(f"Row-restricted DP with p = {p}.")
        count = count_mk_dp_rows(inst, p, k, threads=args.threads, trace=trace)
    logger.info(f"{method} finished in {(time.perf_counter() - started) * 1000:.1f} ms.")
    _out(f"M_k = {count}")
    return EXIT_OK


def cmd_min_k(args) -> int:
    inst, _ = load_instance(args.input)
    k = min_k(inst, p_rows=args.p)
    _out(f"min_k = {'none' if k is None else k}")
    return EXIT_OK


def _report_trial(result: TrialResult) -> bool:
    if result.passed:
        _out(f"PASS {result.reduction} k={result.k} {result.source}")
    else:
        _out(f"FAIL {result.reduction} k={result.k} {result.source} "
             f"expected={result.expected} observed={result.observed}")
    return result.passed


def cmd_verify(args) -> int:
    trials = args.trials if args.trials is not None else config.verify_trials
    max_size = args.max_size if args.max_size is not None else config.verify_max_size
    seed = args.seed if args.seed is not None else config.seed
    names = sorted(discover_reductions()) if args.reduction == "all" else [args.reduction]
    if args.reduction != "all" and not _known(args.reduction):
        return EXIT_USAGE

    failures = 0
    for name in names:
        reduction = get_reduction(name)
        passed = total = 0
        for source, k in reduction.small_sources(max_size):
            total += 1
            passed += _report_trial(reduction.check(source, k))
        rng = random.Random(seed)
        for _ in range(trials):
            source, k = reduction.random_source(rng, max_size)
            total += 1
            passed += _report_trial(reduction.check(source, k))
        _out(f"{name}: {passed}/{total} passed")
        failures += total - passed
    _out("all passed" if failures == 0 else f"{failures} failed")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def cmd_bench(args) -> int:
    inst, _ = load_instance(args.input)
    budget = args.budget if args.budget is not None else config.budget
    _out("k,method,millis,count")
    for k in range(1, args.kmax + 1):
        if inst.m ** k <= budget:
            started = time.perf_counter()
            count = mk_bruteforce(inst, k, budget, threads=args.threads)
            _out(f"{k},brute,{(time.perf_counter() - started) * 1000:.3f},{count}")
        else:
            _out(f"{k},brute,,skipped")
        started = time.perf_counter()
        count = count_mk_dp(inst, k, threads=args.threads)
        _out(f"{k},dp,{(time.perf_counter() - started) * 1000:.3f},{count}")
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "min-k": cmd_min_k,
    "verify-reduction": cmd_verify,
    "bench": cmd_bench,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.config:
        config.reload(args.config)
    level = level_from_name(config.log_level)
    if args.verbose == 1:
        level = min(level, logging.DEBUG)
    elif args.verbose >= 2:
        level = TRACE_LEVEL_NUM
    setup_logging(level)
    if args.threads is None:
        args.threads = config.threads

    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as e:
        logger.error(f"Budget exceeded: {e}")
        return EXIT_BUDGET
    except INPUT_ERRORS as e:
        logger.error(f"Bad input: {e}")
        return EXIT_BAD_INPUT
    except OSError as e:
        logger.error(f"Could not read or write a file: {e}")
        return EXIT_BAD_INPUT


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
