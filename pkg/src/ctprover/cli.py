"""Command-line entry point: prove a file, check a trace, or benchmark a directory."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from .bench import (
    DEFAULT_TIMEOUT,
    PRESETS,
    SUITE_PRESETS,
    InputError,
    bundled_corpus,
    format_csv,
    format_json,
    load_matrix,
    run_problem,
    run_suite,
)
from .clausify import CONJ, DEF, NODEF, POS
from .engine import SearchLimits, StrategySet
from .proof import TraceFormatError, check_proof, parse_trace


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ctprover",
        description="Connection tableau prover for TPTP FOF/CNF problems.")
    p.add_argument("problem", nargs="?",
                   help="TPTP problem file, or a directory to run as a benchmark suite "
                        "(default with --suite: the bundled corpus)")
    p.add_argument("--suite", action="store_true", help="benchmark mode")
    p.add_argument("--strategy", action="append", choices=sorted(PRESETS),
                   help="strategy preset (repeatable in suite mode)")
    cut = p.add_mutually_exclusive_group()
    cut.add_argument("--cut", dest="cut", action="store_const", const=True,
                     help="restricted backtracking on")
    cut.add_argument("--nocut", dest="cut", action="store_const", const=False,
                     help="complete search: no cut, no scut, no comp")
    p.add_argument("--scut", action="store_true", default=None, help="restricted start step")
    p.add_argument("--comp", type=int, metavar="N", help="restart complete at path limit N")
    start = p.add_mutually_exclusive_group()
    start.add_argument("--conj", dest="start", action="store_const", const=CONJ,
                       help="start from conjecture clauses")
    start.add_argument("--pos", dest="start", action="store_const", const=POS,
                       help="start from all-negative clauses")
    cnf = p.add_mutually_exclusive_group()
    cnf.add_argument("--def", dest="clausify", action="store_const", const=DEF,
                     help="definitional clausal form (default)")
    cnf.add_argument("--nodef", dest="clausify", action="store_const", const=NODEF,
                     help="plain clausal form")
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, metavar="SECS")
    p.add_argument("--max-depth", type=int, metavar="N", help="largest path limit to try")
    p.add_argument("--max-nodes", type=int, metavar="N", help="extension attempt budget")
    p.add_argument("--proof", nargs="?", const="-", metavar="FILE",
                   help="print the proof trace, or write it to FILE")
    p.add_argument("--check", metavar="FILE", help="only check the trace in FILE against the problem")
    p.add_argument("--include-dir", metavar="PATH")
    p.add_argument("--stats", action="store_true", help="print search statistics")
    p.add_argument("--dump-matrix", action="store_true", help="print the clause matrix and exit")
    p.add_argument("--csv", metavar="FILE", help="suite mode: write the CSV report to FILE")
    p.add_argument("--json", metavar="FILE", help="suite mode: write a JSON mirror of the report")
    p.add_argument("--workers", type=int, default=1, metavar="N")
    return p


def strategy_from_args(args, preset: Optional[str] = None) -> StrategySet:
    s = PRESETS[preset or "cut-comp"]
    if args.cut is False:
        s = replace(s, cut=False, scut=False, comp_limit=None)
    elif args.cut is True:
        s = replace(s, cut=True)
    if args.scut:
        s = replace(s, scut=True)
    if args.comp is not None:
        s = replace(s, comp_limit=args.comp)
    if args.start:
        s = replace(s, start_mode=args.start)
    if args.clausify:
        s = replace(s, clausify_mode=args.clausify)
    return s


def _error(msg: str) -> int:
    print(f"ctprover: {msg}", file=sys.stderr)
    return 2


def _check_mode(args, strategy: StrategySet) -> int:
    matrix = load_matrix(args.problem, strategy, args.include_dir)
    try:
        trace = parse_trace(Path(args.check).read_text(encoding="utf-8"))
    except (OSError, TraceFormatError) as exc:
        return _error(f"{args.check}: {exc}")
    if trace.matrix_fingerprint != matrix.fingerprint():
        print("rejected: trace belongs to a different matrix (check clausification flags)")
        return 1
    verdict = check_proof(matrix, trace)
    if verdict.accepted:
        print("accepted")
        return 0
    step, reason = verdict.failure
    print(f"rejected: {reason} at step {step}")
    return 1


def _suite_mode(args, limits: SearchLimits) -> int:
    directory = Path(args.problem) if args.problem else bundled_corpus()
    if not directory.is_dir():
        return _error(f"{directory}: not a directory")
    presets = tuple(args.strategy or SUITE_PRESETS)
    strategies = {name: strategy_from_args(args, name) for name in presets}
    records = run_suite(directory, presets, limits, args.workers, args.include_dir, strategies)
    report = format_csv(records, presets)
    if args.csv:
        Path(args.csv).write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    if args.json:
        Path(args.json).write_text(format_json(records, presets), encoding="utf-8")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.problem is None and args.proof not in (None, "-") and Path(args.proof).is_file():
        # "--proof prob.p": the optional value swallowed the problem
        args.problem, args.proof = args.proof, "-"
    try:
        limits = SearchLimits(args.max_depth, args.timeout, args.max_nodes)
        if args.suite or (args.problem and Path(args.problem).is_dir()):
            return _suite_mode(args, limits)
        if not args.problem:
            return _error("no problem file given")
        if args.strategy and len(args.strategy) > 1:
            return _error("several strategies need suite mode")
        strategy = strategy_from_args(args, args.strategy[0] if args.strategy else None)
        if args.check:
            return _check_mode(args, strategy)
        if args.dump_matrix:
            sys.stdout.write(load_matrix(args.problem, strategy, args.include_dir).dump())
            return 0
        proof_file = args.proof if args.proof not in (None, "-") else None
        record = run_problem(args.problem, strategy, limits,
                             preset=(args.strategy or ["custom"])[0],
                             include_dir=args.include_dir, proof=args.proof == "-",
                             proof_file=proof_file, stats=args.stats)
    except InputError as exc:
        return _error(str(exc))
    except ValueError as exc:
        return _error(str(exc))
    return 0 if record.outcome == "Theorem" else 1


if __name__ == "__main__":
    sys.exit(main())
