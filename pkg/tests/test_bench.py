import csv
import io
import json

from ctprover.bench import (
    ERROR,
    PRESETS,
    RunRecord,
    bundled_corpus,
    format_csv,
    format_json,
    problem_files,
    run_suite,
    summarize,
)
from ctprover.cli import main
from ctprover.engine import COUNTER_SATISFIABLE, THEOREM, TIMEOUT, SearchLimits

LIMITS = SearchLimits(timeout=5)


def _dir(tmp_path, files):
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def test_one_problem_two_presets(tmp_path):
    d = _dir(tmp_path, {"t.p": "fof(a, axiom, p(c)). fof(g, conjecture, p(c))."})
    records = run_suite(d, ["nocut", "cut"], LIMITS)
    assert [(r.strategy, r.outcome, r.checked) for r in records] == [
        ("nocut", THEOREM, True), ("cut", THEOREM, True)]
    text = format_csv(records, ["nocut", "cut"])
    runs, summary = text.split("\n\n")
    rows = list(csv.reader(io.StringIO(runs)))
    assert rows[0] == ["problem", "strategy", "outcome", "time", "final_path_limit", "nodes", "checked"]
    assert len(rows) == 3
    assert rows[1][6] == "true" and rows[1][4] == "1"
    srows = list(csv.reader(io.StringIO(summary)))
    assert srows == [["strategy", "solved", "percent", "unique"],
                     ["nocut", "1", "100.00", "0"], ["cut", "1", "100.00", "0"],
                     ["any", "1", "100.00", ""]]


def _rec(problem, strategy, outcome):
    return RunRecord(problem, strategy, outcome, 0.1)


def test_unique_and_any_definitions():
    records = [
        _rec("a", "x", THEOREM), _rec("a", "y", THEOREM),
        _rec("b", "x", THEOREM), _rec("b", "y", TIMEOUT),
        _rec("c", "x", COUNTER_SATISFIABLE), _rec("c", "y", TIMEOUT),
        _rec("d", "x", ERROR), _rec("d", "y", THEOREM),
    ]
    rows = {r.strategy: r for r in summarize(records, ["x", "y"])}
    assert (rows["x"].solved, rows["x"].unique) == (2, 1)
    assert (rows["y"].solved, rows["y"].unique) == (2, 1)
    assert (rows["any"].solved, rows["any"].percent, rows["any"].unique) == (3, 75.0, None)


def test_unreadable_problem_is_an_error_row(tmp_path):
    d = _dir(tmp_path, {"bad.p": "fof(a, axiom, (p).", "good.p": "fof(g, conjecture, p | ~p)."})
    (d / "notes.txt").write_text("ignored")
    records = run_suite(d, ["cut"], LIMITS)
    assert [(r.problem.rsplit("/", 1)[-1], r.outcome) for r in records] == [
        ("bad.p", ERROR), ("good.p", THEOREM)]
    assert [p.name for p in problem_files(d)] == ["bad.p", "good.p"]


def _stable(records):
    return [(r.problem, r.strategy, r.outcome, r.final_path_limit, r.nodes, r.checked)
            for r in records]


def test_workers_do_not_change_results(tmp_path):
    corpus = bundled_corpus()
    for name in ("PEL01.p", "PEL17.p", "EQU01.p", "SAT01.p", "GDI03.p"):
        (tmp_path / name).write_text((corpus / name).read_text())
    presets = ["nocut", "cut-conj"]
    serial = run_suite(tmp_path, presets, LIMITS, workers=1)
    parallel = run_suite(tmp_path, presets, LIMITS, workers=3)
    assert _stable(serial) == _stable(parallel)


def test_json_mirror(tmp_path):
    records = [_rec("a", "x", THEOREM)]
    data = json.loads(format_json(records, ["x"]))
    assert data["runs"][0]["outcome"] == THEOREM
    assert [s["strategy"] for s in data["summary"]] == ["x", "any"]


def test_presets():
    assert PRESETS["cut-comp"] == PRESETS["comp7"]
    assert PRESETS["cut-comp"].comp_limit == 7
    assert PRESETS["nocut"].complete and not PRESETS["cut"].complete
    assert PRESETS["cut-conj"].start_mode == "conj"


def test_suite_cli(tmp_path, capsys):
    (tmp_path / "probs").mkdir()
    d = _dir(tmp_path / "probs",
             {"t.p": "fof(g, conjecture, p | ~p).", "s.p": "fof(a, axiom, p). fof(g, conjecture, q)."})
    out_csv, out_json = tmp_path / "r.csv", tmp_path / "r.json"
    code = main(["--suite", str(d), "--strategy", "nocut", "--strategy", "cut",
                 "--csv", str(out_csv), "--json", str(out_json), "--timeout", "5"])
    assert code == 0
    text = out_csv.read_text()
    assert text.count("\n") == 1 + 4 + 1 + 1 + 3
    assert "any,1,50.00," in text
    assert json.loads(out_json.read_text())["summary"][-1]["solved"] == 1
