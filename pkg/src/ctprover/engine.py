"""Connection-calculus proof search.

The search is an explicit-stack machine. A goal state is the tuple
``(cla, path, lim, lem, todo, off)``: the open subgoal, the active path
(most recent literal first), the remaining depth, the lemma list, the
stack of suspended frames (a cons list) and the next free variable id.
Each literal that is worked on gets a choice point holding a generator of
follow-up goal states. Backtracking rolls back the trail and the proof
record to the choice point's marks and asks its generator for the next
alternative.

Restricted backtracking for lemma and reduction steps is a plain ``return``
from the generator. For extension steps the pushed frame carries a barrier
(the depth of the extension); popping such a frame discards every choice
point down to and including the extension's own.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, NamedTuple, Optional

from .clausify import DEF, POS, Matrix
from .proof import Lem, Pat, ProofTrace, Res, check_proof
from .terms import (
    START_GOAL,
    Literal,
    Trail,
    apply_full,
    literal_vars,
    rename_clause,
    rename_literal,
    substeq,
    unify,
)

THEOREM = "Theorem"
COUNTER_SATISFIABLE = "CounterSatisfiable"
GAVE_UP = "GaveUp"
TIMEOUT = "Timeout"
DEPTH_LIMIT = "DepthLimitReached"
RESOURCE_OUT = "ResourceOut"


@dataclass(frozen=True)
class StrategySet:
    cut: bool = False
    scut: bool = False
    comp_limit: Optional[int] = None
    start_mode: str = POS
    clausify_mode: str = DEF

    def __post_init__(self):
        if self.comp_limit is not None:
            if self.comp_limit < 1:
                raise ValueError("comp limit must be positive")
            if not (self.cut or self.scut):
                raise ValueError("comp limit needs cut or scut to have any effect")

    @property
    def complete(self) -> bool:
        return not (self.cut or self.scut)


@dataclass(frozen=True)
class SearchLimits:
    max_path_limit: Optional[int] = None
    timeout: Optional[float] = None
    max_nodes: Optional[int] = None

    def __post_init__(self):
        if self.max_path_limit is not None and self.max_path_limit < 1:
            raise ValueError("max path limit must be at least 1")


class Frame(NamedTuple):
    cut_barrier: Optional[int]
    path: tuple
    path_limit: int
    lemmas: tuple
    remaining_goal: tuple


@dataclass
class Stats:
    extensions: int = 0
    reductions: int = 0
    lemma_hits: int = 0
    nodes: int = 0
    max_depth: int = 0
    final_path_limit: int = 0
    restarts: int = 0

    def as_pairs(self) -> str:
        return (f"extensions={self.extensions} reductions={self.reductions} "
                f"lemma_hits={self.lemma_hits} final_path_limit={self.final_path_limit} "
                f"nodes={self.nodes} max_depth={self.max_depth}")


class SearchInterrupted(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class Budget:
    """Wall-clock and node budget, polled once per extension attempt."""

    def __init__(self, timeout: Optional[float] = None, max_nodes: Optional[int] = None):
        self.deadline = None if timeout is None else time.monotonic() + timeout
        self.max_nodes = max_nodes
        self.nodes = 0

    def poll(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchInterrupted(RESOURCE_OUT)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchInterrupted(TIMEOUT)


@dataclass
class Proved:
    trace: ProofTrace


@dataclass
class Failed:
    depth_exceeded: bool


@dataclass
class SearchOutcome:
    status: str
    trace: Optional[ProofTrace] = None
    stats: Stats = field(default_factory=Stats)
    matrix: Optional[Matrix] = None
    checked: bool = False

    @property
    def final_path_limit(self) -> int:
        return self.stats.final_path_limit


# -- single rules -----------------------------------------------------------

def lemma_step(goal: Literal, lemmas, trail: Trail) -> bool:
    return any(substeq(trail, goal, l) for l in lemmas)


def reduction_candidates(goal: Literal, path, trail: Trail) -> Iterator[Literal]:
    """Path literals complementary to ``goal``, most recent first.

    Each yielded literal leaves its unifier on the trail; resuming undoes it.
    """
    neg = not goal.neg
    for p in path:
        if p.neg != neg:
            continue
        mark = trail.mark()
        if unify(trail, goal.atom, p.atom):
            yield p
            trail.undo(mark)


def extension_candidates(goal: Literal, matrix: Matrix, trail: Trail, offset: int,
                         path_len: int, path_limit: int, state=None) -> Iterator[tuple]:
    """Contrapositives connecting to ``goal``, in matrix order.

    Yields ``(entry, new_subgoal)`` with the unifier on the trail. A
    non-ground entry that unifies while the path is already at the limit is
    skipped and sets ``state.depth_exceeded``.
    """
    for entry in matrix.entries(goal.predicate, not goal.neg):
        mark = trail.mark()
        if not unify(trail, goal.atom, rename_literal(entry.literal, offset).atom):
            continue
        if not entry.ground and path_len >= path_limit:
            if state is not None:
                state.depth_exceeded = True
            trail.undo(mark)
            continue
        yield entry, rename_clause(entry.rest, offset)
        trail.undo(mark)


# -- search at one depth ----------------------------------------------------

class _Search:
    def __init__(self, matrix: Matrix, strategy: StrategySet, path_limit: int,
                 budget: Budget, stats: Stats, node_log: Optional[list]):
        self.matrix = matrix
        self.cut = strategy.cut
        self.scut = strategy.scut
        self.path_limit = path_limit
        self.budget = budget
        self.stats = stats
        self.node_log = node_log
        self.trail = Trail()
        self.proof: list = []
        self.choices: list = []
        self.depth_exceeded = False

    def _log(self, kind: str, candidate, goal: Literal, path: tuple) -> None:
        trail = self.trail
        self.node_log.append((kind, candidate, apply_full(trail, goal),
                              tuple(apply_full(trail, p) for p in path)))

    def alternatives(self, state: tuple) -> Iterator[tuple]:
        cla, path, lim, lem, todo, off = state
        lit = cla[0]
        rest = cla[1:]
        trail, proof, stats, cut = self.trail, self.proof, self.stats, self.cut
        logging = self.node_log is not None

        if lemma_step(lit, lem, trail):
            if logging:
                self._log("lem", None, lit, path)
            stats.lemma_hits += 1
            proof.append(Lem(lit))
            yield (rest, path, lim, lem, todo, off)
            if cut:
                return

        neg = not lit.neg
        for k, p in enumerate(path):
            if p.neg != neg:
                continue
            if logging:
                snapshot = (apply_full(trail, lit), tuple(apply_full(trail, q) for q in path))
            if unify(trail, lit.atom, p.atom):
                if logging:
                    self.node_log.append(("red", k) + snapshot)
                stats.reductions += 1
                proof.append(Pat(lit))
                yield (rest, path, lim, (lit,) + lem, todo, off)
                if cut:
                    return

        at_root = not path
        new_path = (lit,) + path
        depth = len(new_path)
        for entry in self.matrix.entries(lit.predicate, neg):
            self.budget.poll()
            stats.nodes += 1
            if logging:
                snapshot = (apply_full(trail, lit), tuple(apply_full(trail, q) for q in path))
            if entry.ground:
                if not unify(trail, lit.atom, entry.literal.atom):
                    continue
                subgoal = entry.rest
                new_off = off
            else:
                mark = trail.mark()
                if not unify(trail, lit.atom, rename_literal(entry.literal, off).atom):
                    continue
                if lim <= 0:
                    self.depth_exceeded = True
                    trail.undo(mark)
                    continue
                subgoal = rename_clause(entry.rest, off)
                new_off = off + entry.nvars
            if logging:
                self.node_log.append(("ext", (entry.clause_id, entry.literal_index)) + snapshot)
            stats.extensions += 1
            if depth > stats.max_depth:
                stats.max_depth = depth
            proof.append(Res(lit, entry.clause_id, entry.literal_index))
            frame = Frame(lim if cut else None, path, lim, (lit,) + lem, rest)
            yield (subgoal, new_path, lim - 1, lem, (frame, todo), new_off)
            if at_root and self.scut:
                return

    def run(self) -> Optional[tuple]:
        """Search from the start goal; returns the final trail bindings on success."""
        trail, proof, choices = self.trail, self.proof, self.choices
        state: Optional[tuple] = ((START_GOAL,), (), self.path_limit, (), None, 0)
        while True:
            if state is None:
                state = self._backtrack()
                if state is None:
                    return None
                continue
            cla, path, lim, lem, todo, off = state
            if not cla:
                if todo is None:
                    return trail.snapshot()
                frame, rest_todo = todo
                if frame.cut_barrier is not None:
                    self._cut(frame.cut_barrier)
                state = (frame.remaining_goal, frame.path, frame.path_limit,
                         frame.lemmas, rest_todo, off)
                continue
            if path and self._irregular(cla, path):
                state = None
                continue
            choices.append([self.alternatives(state), trail.mark(), len(proof), lim])
            state = self._backtrack()
            if state is None:
                return None

    def _irregular(self, cla: tuple, path: tuple) -> bool:
        trail = self.trail
        for l in cla:
            for p in path:
                if substeq(trail, l, p):
                    return True
        return False

    def _backtrack(self) -> Optional[tuple]:
        trail, proof, choices = self.trail, self.proof, self.choices
        while choices:
            gen, mark, plen, _ = choices[-1]
            trail.undo(mark)
            del proof[plen:]
            nxt = next(gen, None)
            if nxt is not None:
                return nxt
            choices.pop()
        return None

    def _cut(self, barrier: int) -> None:
        choices = self.choices
        while choices:
            cp = choices.pop()
            cp[0].close()
            if cp[3] == barrier:
                return


def prove_at_limit(matrix: Matrix, strategy: StrategySet, path_limit: int,
                   budget: Optional[Budget] = None, stats: Optional[Stats] = None,
                   node_log: Optional[list] = None):
    """Exhaust the search space for one path limit.

    Returns :class:`Proved` or :class:`Failed`; raises
    :class:`SearchInterrupted` when the budget runs out. ``node_log``, when
    given, receives one ``(kind, candidate, goal, path)`` tuple per applied
    rule, with goal and path fully instantiated at that moment.
    """
    if path_limit < 1:
        raise ValueError("path limit must be at least 1")
    search = _Search(matrix, strategy, path_limit, budget or Budget(),
                     stats if stats is not None else Stats(), node_log)
    bindings = search.run()
    if bindings is None:
        return Failed(search.depth_exceeded)
    return Proved(_make_trace(matrix, search.proof, bindings))


def _make_trace(matrix: Matrix, steps: list, bindings: dict) -> ProofTrace:
    used = {v for s in steps for v in literal_vars(s.literal)}
    subst = {v: apply_full(bindings, v) for v in sorted(used) if v in bindings}
    return ProofTrace(list(steps), subst, matrix.fingerprint())


def solve(matrix: Matrix, strategy: StrategySet = StrategySet(),
          limits: SearchLimits = SearchLimits(), node_log: Optional[list] = None,
          on_iteration: Optional[Callable[[int, StrategySet, object], None]] = None) -> SearchOutcome:
    """Iterative deepening over the path limit, starting at 1.

    A complete strategy that exhausts a matrix whose start clauses do not
    cover every all-negative clause retries once on the positive-start
    matrix before concluding CounterSatisfiable.
    """
    stats = Stats()
    budget = Budget(limits.timeout, limits.max_nodes)
    current = strategy
    limit = 1
    try:
        while True:
            if limits.max_path_limit is not None and limit > limits.max_path_limit:
                stats.final_path_limit = limits.max_path_limit
                return SearchOutcome(DEPTH_LIMIT, None, stats, matrix)
            stats.final_path_limit = limit
            result = prove_at_limit(matrix, current, limit, budget, stats, node_log)
            if on_iteration is not None:
                on_iteration(limit, current, result)
            if isinstance(result, Proved):
                verdict = check_proof(matrix, result.trace)
                if not verdict.accepted:
                    raise AssertionError(f"engine produced a rejected proof: {verdict.failure}")
                return SearchOutcome(THEOREM, result.trace, stats, matrix, checked=True)
            if not current.complete and current.comp_limit is not None and (
                    limit >= current.comp_limit or not result.depth_exceeded):
                current = replace(current, cut=False, scut=False, comp_limit=None)
                stats.restarts += 1
                limit = 1
                continue
            if result.depth_exceeded:
                limit += 1
                continue
            if not current.complete:
                return SearchOutcome(GAVE_UP, None, stats, matrix)
            if not matrix.start_complete:
                matrix = matrix.with_start_mode(POS)
                limit = 1
                continue
            return SearchOutcome(COUNTER_SATISFIABLE, None, stats, matrix)
    except SearchInterrupted as exc:
        return SearchOutcome(exc.reason, None, stats, matrix)
