"""Strategy presets, single-problem runs with SZS reporting, and the suite harness."""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .clausify import CONJ, ClausifyError, Matrix, build_matrix
from .engine import (
    COUNTER_SATISFIABLE,
    DEPTH_LIMIT,
    GAVE_UP,
    RESOURCE_OUT,
    THEOREM,
    TIMEOUT,
    SearchLimits,
    SearchOutcome,
    StrategySet,
    solve,
)
from .proof import serialize_trace
from .tptp import TPTPError, parse_file

DEFAULT_TIMEOUT = 10.0
DEFAULT_COMP_LIMIT = 7

PRESETS: dict[str, StrategySet] = {
    "cut-comp": StrategySet(cut=True, scut=True, comp_limit=DEFAULT_COMP_LIMIT),
    "nocut": StrategySet(),
    "cut": StrategySet(cut=True, scut=True),
    "cut-conj": StrategySet(cut=True, scut=True, start_mode=CONJ),
    "comp7": StrategySet(cut=True, scut=True, comp_limit=DEFAULT_COMP_LIMIT),
}

SUITE_PRESETS = ("nocut", "cut", "cut-conj", "cut-comp")

# SZS has no separate verdict for an exhausted depth or node budget
SZS_STATUS = {
    THEOREM: "Theorem",
    COUNTER_SATISFIABLE: "CounterSatisfiable",
    GAVE_UP: "GaveUp",
    TIMEOUT: "Timeout",
    DEPTH_LIMIT: "ResourceOut",
    RESOURCE_OUT: "ResourceOut",
}

ERROR = "error"
CSV_COLUMNS = ("problem", "strategy", "outcome", "time", "final_path_limit", "nodes", "checked")


class InputError(Exception):
    """The problem could not be read, parsed or clausified."""


@dataclass
class RunRecord:
    problem: str
    strategy: str
    outcome: str
    wall_time: float
    final_path_limit: int = 0
    nodes: int = 0
    checked: bool = False


def load_matrix(path, strategy: StrategySet, include_dir=None) -> Matrix:
    try:
        formulas = parse_file(path, include_dir)
        return build_matrix(formulas, strategy.clausify_mode, strategy.start_mode)
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    except (TPTPError, ClausifyError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def prove_file(path, strategy: StrategySet, limits: SearchLimits,
               include_dir=None) -> tuple[SearchOutcome, float]:
    start = time.perf_counter()
    matrix = load_matrix(path, strategy, include_dir)
    # solve() replays every proof through the checker before returning Theorem
    outcome = solve(matrix, strategy, limits)
    return outcome, time.perf_counter() - start


def run_problem(path, strategy: StrategySet, limits: SearchLimits, preset: str = "custom",
                include_dir=None, out: Optional[TextIO] = None, proof: bool = False,
                proof_file=None, stats: bool = False) -> RunRecord:
    """Prove one file and print its SZS status line (and the proof if asked).

    Raises :class:`InputError` when the problem cannot be loaded.
    """
    out = out or sys.stdout
    outcome, elapsed = prove_file(path, strategy, limits, include_dir)
    status = SZS_STATUS.get(outcome.status, "Error")
    out.write(f"% SZS status {status} for {Path(path).stem}\n")
    if stats:
        out.write(f"% {outcome.stats.as_pairs()}\n")
    if outcome.status == THEOREM and outcome.trace is not None:
        text = serialize_trace(outcome.trace)
        if proof:
            out.write(f"% SZS output start Proof for {Path(path).stem}\n")
            out.write(text)
            out.write(f"% SZS output end Proof for {Path(path).stem}\n")
        if proof_file is not None:
            Path(proof_file).write_text(text, encoding="utf-8")
    return RunRecord(str(path), preset, outcome.status, elapsed,
                     outcome.stats.final_path_limit, outcome.stats.nodes, outcome.checked)


# -- suite ------------------------------------------------------------------

def _run_one(job: tuple) -> RunRecord:
    path, preset, strategy, limits, include_dir = job
    start = time.perf_counter()
    try:
        outcome, elapsed = prove_file(path, strategy, limits, include_dir)
    except Exception:
        return RunRecord(str(path), preset, ERROR, time.perf_counter() - start)
    return RunRecord(str(path), preset, outcome.status, elapsed,
                     outcome.stats.final_path_limit, outcome.stats.nodes, outcome.checked)


def problem_files(directory) -> list[Path]:
    directory = Path(directory)
    return sorted(p for p in directory.iterdir() if p.is_file() and p.suffix == ".p")


def run_suite(directory, presets: Sequence[str] = SUITE_PRESETS,
              limits: SearchLimits = SearchLimits(timeout=DEFAULT_TIMEOUT),
              workers: int = 1, include_dir=None,
              strategies: Optional[dict] = None) -> list[RunRecord]:
    """Run every (problem, preset) pair; rows come back in problem, preset order."""
    strategies = strategies or PRESETS
    jobs = [(str(p), name, strategies[name], limits, include_dir)
            for p in problem_files(directory) for name in presets]
    if workers <= 1:
        return [_run_one(j) for j in jobs]
    records: list[RunRecord] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_one, j) for j in jobs]
        for job, fut in zip(jobs, futures):
            try:
                records.append(fut.result())
            except Exception:
                # a dead worker only costs its own row
                records.append(RunRecord(job[0], job[1], ERROR, 0.0))
    return records


@dataclass
class SummaryRow:
    strategy: str
    solved: int
    percent: float
    unique: Optional[int]


def summarize(records: Sequence[RunRecord], presets: Sequence[str]) -> list[SummaryRow]:
    problems = sorted({r.problem for r in records})
    solved_by: dict[str, set] = {p: set() for p in problems}
    for r in records:
        if r.outcome == THEOREM:
            solved_by[r.problem].add(r.strategy)
    total = len(problems) or 1
    rows = []
    for name in presets:
        solved = sum(1 for p in problems if name in solved_by[p])
        unique = sum(1 for p in problems if solved_by[p] == {name})
        rows.append(SummaryRow(name, solved, round(100.0 * solved / total, 2), unique))
    union = sum(1 for p in problems if solved_by[p])
    rows.append(SummaryRow("any", union, round(100.0 * union / total, 2), None))
    return rows


def format_csv(records: Sequence[RunRecord], presets: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.problem, r.strategy, r.outcome, f"{r.wall_time:.3f}",
                    r.final_path_limit, r.nodes, str(r.checked).lower()])
    buf.write("\n")
    w.writerow(("strategy", "solved", "percent", "unique"))
    for s in summarize(records, presets):
        w.writerow([s.strategy, s.solved, f"{s.percent:.2f}", "" if s.unique is None else s.unique])
    return buf.getvalue()


def format_json(records: Sequence[RunRecord], presets: Sequence[str]) -> str:
    data = {
        "runs": [asdict(r) for r in records],
        "summary": [asdict(s) for s in summarize(records, presets)],
    }
    return json.dumps(data, indent=2) + "\n"


def bundled_corpus() -> Path:
    return Path(__file__).parent / "corpus"


def default_workers() -> int:
    return max(1, os.cpu_count() or 1)
