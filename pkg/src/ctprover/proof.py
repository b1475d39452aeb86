"""Proof traces: step types, a line-based file format, and a linear checker.

A trace is the left-to-right flattening of a connection proof. The checker
walks it with its own bookkeeping (path, scoped lemma list, remaining steps)
and only relies on the matrix clauses, never on the prover's search state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .terms import (
    MARKER,
    START_GOAL,
    Literal,
    Term,
    format_literal,
    format_term,
    literal_vars,
    intern_symbol,
)
from .tptp import TPTPSyntaxError, tokenize, _unquote


@dataclass(frozen=True)
class Lem:
    literal: Literal


@dataclass(frozen=True)
class Pat:
    literal: Literal


@dataclass(frozen=True)
class Res:
    literal: Literal
    clause_id: int
    literal_index: int


ProofStep = Union[Lem, Pat, Res]


@dataclass
class ProofTrace:
    steps: list
    final_subst: dict = field(default_factory=dict)
    matrix_fingerprint: str = ""

    def instantiated_steps(self) -> list:
        return [_with_literal(s, _subst_literal(s.literal, self.final_subst)) for s in self.steps]


def _with_literal(step: ProofStep, l: Literal) -> ProofStep:
    if isinstance(step, Res):
        return Res(l, step.clause_id, step.literal_index)
    return type(step)(l)


def _subst_term(t: Term, subst: dict) -> Term:
    # single pass: the recorded substitution is already fully applied
    if t.__class__ is int:
        return subst.get(t, t)
    if len(t) == 1:
        return t
    return (t[0], *[_subst_term(a, subst) for a in t[1:]])


def _subst_literal(l: Literal, subst: dict) -> Literal:
    return Literal(l.neg, _subst_term(l.atom, subst)) if subst else l


# -- checking ---------------------------------------------------------------

LEMMA_MISS = "lemma-miss"
PATH_MISS = "path-miss"
CLAUSE_MISMATCH = "clause-mismatch"
TRAILING_STEPS = "trailing-steps"
MISSING_STEPS = "missing-steps"
ROOT_MISMATCH = "root-mismatch"


@dataclass(frozen=True)
class CheckVerdict:
    accepted: bool
    failure: Optional[tuple] = None   # (1-based step number, reason code)

    def __bool__(self) -> bool:
        return self.accepted


class _Reject(Exception):
    def __init__(self, step: int, reason: str):
        self.step, self.reason = step, reason


def _freeze(t: Term) -> Term:
    if t.__class__ is int:
        return (f"?V{t}",)
    if len(t) == 1:
        return t
    return (t[0], *[_freeze(a) for a in t[1:]])


def _match(pattern: Term, target: Term, theta: dict) -> bool:
    """One-way matching of a clause term onto a ground term, extending ``theta``."""
    if pattern.__class__ is int:
        bound = theta.get(pattern)
        if bound is None:
            theta[pattern] = target
            return True
        return bound == target
    if target.__class__ is int or pattern[0] != target[0] or len(pattern) != len(target):
        return False
    return all(_match(p, t, theta) for p, t in zip(pattern[1:], target[1:]))


def _match_literal(pattern: Literal, target: Literal, theta: dict) -> bool:
    if pattern.neg != target.neg:
        return False
    trial = dict(theta)
    if _match(pattern.atom, target.atom, trial):
        theta.update(trial)
        return True
    return False


class _Checker:
    def __init__(self, matrix, steps: list, on_goal=None):
        self.matrix = matrix
        self.steps = steps
        self.pos = 0
        self.on_goal = on_goal
        self.instances: list = []

    def step(self, goal: Literal, path: tuple, lemmas: tuple) -> None:
        n = self.pos
        step = self.steps[n]
        self.pos += 1
        if self.on_goal is not None:
            self.on_goal(goal, path)
        if isinstance(step, Lem):
            if goal not in lemmas:
                raise _Reject(n + 1, LEMMA_MISS)
        elif isinstance(step, Pat):
            if goal.complement() not in path:
                raise _Reject(n + 1, PATH_MISS)
        else:
            clause = self.matrix.clause(step.clause_id)
            if clause is None or not 0 <= step.literal_index < len(clause.literals):
                raise _Reject(n + 1, CLAUSE_MISMATCH)
            theta: dict = {}
            if not _match_literal(clause.literals[step.literal_index], goal.complement(), theta):
                raise _Reject(n + 1, CLAUSE_MISMATCH)
            below = (goal,) + path
            local = lemmas
            for k, pattern in enumerate(clause.literals):
                if k == step.literal_index:
                    continue
                if self.pos >= len(self.steps):
                    raise _Reject(self.pos + 1, MISSING_STEPS)
                child = self.steps[self.pos].literal
                if not _match_literal(pattern, child, theta):
                    raise _Reject(self.pos + 1, CLAUSE_MISMATCH)
                self.step(child, below, local)
                # a closed sibling is a lemma for the siblings to its right only
                local = local + (child,)
            self.instances.append(
                tuple(Literal(l.neg, _instantiate(l.atom, theta)) for l in clause.literals))


def _instantiate(t: Term, theta: dict) -> Term:
    if t.__class__ is int:
        return theta[t]
    if len(t) == 1:
        return t
    return (t[0], *[_instantiate(a, theta) for a in t[1:]])


def _prepare(trace: ProofTrace) -> list:
    out = []
    for s in trace.instantiated_steps():
        l = s.literal
        out.append(_with_literal(s, Literal(l.neg, _freeze(l.atom))))
    return out


def check_proof(matrix, trace: ProofTrace, on_goal=None) -> CheckVerdict:
    """Replay ``trace`` against ``matrix``.

    ``on_goal(goal, path)`` is called for every goal visited, mainly for
    tests that want to look at the reconstructed paths.
    """
    if trace.matrix_fingerprint and trace.matrix_fingerprint != matrix.fingerprint():
        raise ValueError("trace was produced for a different matrix")
    steps = _prepare(trace)
    if not steps:
        return CheckVerdict(False, (1, MISSING_STEPS))
    if isinstance(steps[0], Res) and steps[0].literal != START_GOAL:
        return CheckVerdict(False, (1, ROOT_MISMATCH))
    checker = _Checker(matrix, steps, on_goal)
    try:
        checker.step(START_GOAL, (), ())
    except _Reject as r:
        return CheckVerdict(False, (r.step, r.reason))
    except RecursionError:
        return CheckVerdict(False, (checker.pos, MISSING_STEPS))
    if checker.pos != len(steps):
        return CheckVerdict(False, (checker.pos + 1, TRAILING_STEPS))
    return CheckVerdict(True)


def ground_instances(matrix, trace: ProofTrace) -> Optional[list]:
    """Ground clause instances used by ``trace``, or None when it is rejected."""
    steps = _prepare(trace)
    if not steps or (isinstance(steps[0], Res) and steps[0].literal != START_GOAL):
        return None
    checker = _Checker(matrix, steps)
    try:
        checker.step(START_GOAL, (), ())
    except _Reject:
        return None
    if checker.pos != len(steps):
        return None
    return checker.instances


# -- serialization ----------------------------------------------------------

class TraceFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def serialize_trace(trace: ProofTrace) -> str:
    lines = [f"matrix {trace.matrix_fingerprint}"]
    for s in trace.steps:
        if isinstance(s, Res):
            lines.append(f"res {format_literal(s.literal)} {s.clause_id} {s.literal_index}")
        elif isinstance(s, Pat):
            lines.append(f"pat {format_literal(s.literal)}")
        else:
            lines.append(f"lem {format_literal(s.literal)}")
    if trace.final_subst:
        lines.append("subst")
        for v in sorted(trace.final_subst):
            lines.append(f"V{v} = {format_term(trace.final_subst[v])}")
    return "\n".join(lines) + "\n"


class _TermReader:
    def __init__(self, text: str, lineno: int):
        try:
            self.toks = tokenize(text, f"line {lineno}")
        except TPTPSyntaxError as exc:
            raise TraceFormatError(lineno, str(exc)) from None
        self.i = 0
        self.lineno = lineno

    def fail(self, what: str):
        raise TraceFormatError(self.lineno, f"{what}, got {self.toks[self.i].text!r}")

    def term(self) -> Term:
        t = self.toks[self.i]
        self.i += 1
        if t.kind == "upper":
            if t.text[0] != "V" or not t.text[1:].isdigit():
                self.i -= 1
                self.fail("expected V<id>")
            return int(t.text[1:])
        if t.kind in ("lower", "sq", "dollar", "num", "dq"):
            head = intern_symbol(_unquote(t.text) if t.kind == "sq" else t.text)
            if self.at("("):
                self.i += 1
                args = [self.term()]
                while self.at(","):
                    self.i += 1
                    args.append(self.term())
                if not self.at(")"):
                    self.fail("expected ')'")
                self.i += 1
                return (head, *args)
            return (head,)
        self.i -= 1
        self.fail("expected a term")

    def at(self, text: str) -> bool:
        t = self.toks[self.i]
        return t.kind == "op" and t.text == text

    def end(self):
        if self.toks[self.i].kind != "eof":
            self.fail("trailing input")


def parse_literal(text: str, lineno: int = 0) -> Literal:
    text = text.strip()
    neg = text.startswith("-")
    if neg:
        text = text[1:]
    if text == MARKER:
        return Literal(neg, (MARKER,))
    r = _TermReader(text, lineno)
    left = r.term()
    if r.at("="):
        r.i += 1
        right = r.term()
        r.end()
        return Literal(neg, ("=", left, right))
    r.end()
    if left.__class__ is int:
        raise TraceFormatError(lineno, "variable used as an atom")
    return Literal(neg, left)


def parse_trace(text: str) -> ProofTrace:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("matrix "):
        raise TraceFormatError(1, "expected 'matrix <fingerprint>'")
    fingerprint = lines[0][len("matrix "):].strip()
    steps: list = []
    subst: dict = {}
    in_subst = False
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if in_subst:
            var, sep, rhs = line.partition(" = ")
            if not sep or var[:1] != "V" or not var[1:].isdigit():
                raise TraceFormatError(lineno, "expected 'V<id> = <term>'")
            r = _TermReader(rhs, lineno)
            subst[int(var[1:])] = r.term()
            r.end()
            continue
        kind, _, rest = line.partition(" ")
        if kind == "subst" and not rest:
            in_subst = True
        elif kind == "lem":
            steps.append(Lem(parse_literal(rest, lineno)))
        elif kind == "pat":
            steps.append(Pat(parse_literal(rest, lineno)))
        elif kind == "res":
            parts = rest.rsplit(" ", 2)
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                raise TraceFormatError(lineno, "expected 'res <literal> <clause_id> <literal_index>'")
            steps.append(Res(parse_literal(parts[0], lineno), int(parts[1]), int(parts[2])))
        else:
            raise TraceFormatError(lineno, f"unknown record {kind!r}")
    return ProofTrace(steps, subst, fingerprint)


def trace_vars(steps) -> set[int]:
    return {v for s in steps for v in literal_vars(s.literal)}
