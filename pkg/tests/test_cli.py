import subprocess
import sys

import pytest

from ctprover.bench import bundled_corpus
from ctprover.cli import build_parser, main, strategy_from_args
from ctprover.clausify import CONJ, NODEF, POS

TAUT = "fof(a, axiom, p(c)).\nfof(g, conjecture, p(c)).\n"
SAT = "fof(a, axiom, p).\nfof(g, conjecture, q).\n"


@pytest.fixture
def problem(tmp_path):
    def write(text, name="prob.p"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_theorem_exit_zero(capsys, problem):
    code, out, _ = run(capsys, problem(TAUT))
    assert code == 0
    assert out == "% SZS status Theorem for prob\n"


def test_counter_satisfiable_under_complete_strategy(capsys, problem):
    code, out, _ = run(capsys, "--nocut", problem(SAT))
    assert code == 1
    assert out == "% SZS status CounterSatisfiable for prob\n"


def test_exhausted_depth_is_resource_out(capsys, problem):
    # proving p(a) from p(f(X)) => p(X) descends forever
    text = "fof(a, axiom, ![X]: (p(f(X)) => p(X))). fof(g, conjecture, p(a)).\n"
    for flags in ([], ["--nocut"]):
        code, out, _ = run(capsys, *flags, "--max-depth", "4", problem(text))
        assert (code, out) == (1, "% SZS status ResourceOut for prob\n")


def test_failed_search_without_depth_cutoff_is_counter_satisfiable(capsys, problem):
    # nothing mentions q, so even the restricted search fails exhaustively
    text = "fof(a, axiom, ![X]: (p(X) => p(f(X)))). fof(b, axiom, p(a)). fof(g, conjecture, q).\n"
    code, out, _ = run(capsys, "--max-depth", "4", problem(text))
    assert (code, out) == (1, "% SZS status CounterSatisfiable for prob\n")


def test_timeout(capsys):
    path = str(bundled_corpus() / "PEL34.p")
    code, out, _ = run(capsys, "--timeout", "1", path)
    assert code == 1
    assert out == "% SZS status Timeout for PEL34\n"


def test_input_errors_exit_two(capsys, problem, tmp_path):
    code, out, err = run(capsys, problem("fof(a, axiom, (p).\n"))
    assert code == 2 and out == "" and ":1:" in err
    code, _, err = run(capsys, str(tmp_path / "missing.p"))
    assert code == 2 and "missing.p" in err
    code, _, err = run(capsys, "--comp", "3", "--nocut", problem(TAUT))
    assert code == 2


def test_proof_output_and_check(capsys, problem, tmp_path):
    path = problem(TAUT)
    code, out, _ = run(capsys, "--proof", "--stats", path)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "% SZS status Theorem for prob"
    assert lines[1].startswith("% extensions=2 ")
    assert lines[2] == "% SZS output start Proof for prob"
    assert lines[3].startswith("matrix ") and len(lines[3]) == len("matrix ") + 64
    assert lines[4:6] == ["res -# 2 0", "res -p(c) 1 0"]
    assert lines[-1] == "% SZS output end Proof for prob"

    trace_file = tmp_path / "proof.txt"
    code, out, _ = run(capsys, "--proof", str(trace_file), path)
    assert code == 0 and "SZS output" not in out
    assert trace_file.read_text() == "\n".join(lines[3:-1]) + "\n"

    code, out, _ = run(capsys, "--check", str(trace_file), path)
    assert (code, out) == (0, "accepted\n")

    text = trace_file.read_text().replace("res -p(c) 1 0", "res -p(c) 2 0")
    trace_file.write_text(text)
    code, out, _ = run(capsys, "--check", str(trace_file), path)
    assert (code, out) == (1, "rejected: clause-mismatch at step 2\n")

    code, out, _ = run(capsys, "--check", str(trace_file), problem(SAT, "other.p"))
    assert code == 1 and "different matrix" in out


def test_dump_matrix(capsys, problem):
    code, out, _ = run(capsys, "--dump-matrix", problem(TAUT))
    assert (code, out) == (0, "1: p(c)\n2: # | -p(c)\n")
    code, out, _ = run(capsys, "--dump-matrix", "--conj", problem(TAUT))
    assert out == "1: p(c)\n2: # | -p(c)\n"


def test_strategy_flags():
    p = build_parser()
    s = strategy_from_args(p.parse_args(["x.p"]))
    assert s.cut and s.scut and s.comp_limit == 7 and s.start_mode == POS
    s = strategy_from_args(p.parse_args(["--nocut", "x.p"]))
    assert not s.cut and not s.scut and s.comp_limit is None
    s = strategy_from_args(p.parse_args(["--nocut", "--scut", "--conj", "--nodef", "x.p"]))
    assert s.scut and not s.cut and s.start_mode == CONJ and s.clausify_mode == NODEF
    s = strategy_from_args(p.parse_args(["x.p"]), "cut-conj")
    assert s.cut and s.comp_limit is None and s.start_mode == CONJ


def test_proof_flag_before_problem(capsys):
    path = str(bundled_corpus() / "PEL01.p")
    code, out, _ = run(capsys, "--proof", path)
    assert code == 0 and "% SZS output start Proof for PEL01" in out


def test_output_is_deterministic():
    path = str(bundled_corpus() / "PEL24.p")
    cmd = [sys.executable, "-m", "ctprover.cli", "--proof", path]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second
    assert first.startswith("% SZS status Theorem for PEL24\n")
