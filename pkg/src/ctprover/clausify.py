"""From parsed formulas to the clause matrix used by the prover.

The matrix is the clause form of ``axioms & ~conjecture``. Start clauses get
the extra positive literal ``#`` (at position 0) and search begins from the
single open goal ``-#``.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .terms import (
    MARKER_LIT,
    START_GOAL,
    Literal,
    format_literal,
    intern_symbol,
    is_ground,
    max_var,
)
from .tptp import (
    AnnotatedFormula,
    And,
    Atom,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    conj,
)

DEF = "def"
NODEF = "nodef"
POS = "pos"
CONJ = "conj"

AXIOM_SIDE = "axiom"
CONJECTURE_SIDE = "conjecture"
EQUALITY_AXIOM = "equality"
DEFINITION = "definition"

AXIOM_ROLES = frozenset({"axiom", "hypothesis", "definition", "lemma", "theorem"})


class ClausifyError(ValueError):
    pass


# -- naming -----------------------------------------------------------------

class Namer:
    """Fresh ``skN`` / ``dfN`` symbols, skipping names already in the problem."""

    def __init__(self, taken: Iterable[str] = ()):
        self.taken = set(taken)
        self.counters = {"sk": 0, "df": 0}

    def fresh(self, prefix: str) -> str:
        while True:
            self.counters[prefix] += 1
            name = f"{prefix}{self.counters[prefix]}"
            if name not in self.taken:
                self.taken.add(name)
                return intern_symbol(name)


def formula_symbols(f: Formula) -> set[str]:
    out: set[str] = set()

    def term(t):
        if not isinstance(t, str):
            out.add(t[0])
            for a in t[1:]:
                term(a)

    def walk(f):
        if isinstance(f, Atom):
            out.add(f.pred)
            for a in f.args:
                term(a)
        elif isinstance(f, Not):
            walk(f.arg)
        elif isinstance(f, (Forall, Exists)):
            walk(f.body)
        else:
            walk(f.left)
            walk(f.right)

    walk(f)
    return out


# -- normal forms -----------------------------------------------------------

def nnf(f: Formula, positive: bool = True) -> Formula:
    """Negation normal form: only And/Or/quantifiers over (negated) atoms."""
    if isinstance(f, Atom):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return nnf(f.arg, not positive)
    if isinstance(f, And):
        cls = And if positive else Or
        return cls(nnf(f.left, positive), nnf(f.right, positive))
    if isinstance(f, Or):
        cls = Or if positive else And
        return cls(nnf(f.left, positive), nnf(f.right, positive))
    if isinstance(f, Implies):
        if positive:
            return Or(nnf(f.left, False), nnf(f.right, True))
        return And(nnf(f.left, True), nnf(f.right, False))
    if isinstance(f, Iff):
        if positive:
            return And(Or(nnf(f.left, False), nnf(f.right, True)),
                       Or(nnf(f.right, False), nnf(f.left, True)))
        return And(Or(nnf(f.left, True), nnf(f.right, True)),
                   Or(nnf(f.left, False), nnf(f.right, False)))
    if isinstance(f, Forall):
        return Forall(f.vars, nnf(f.body, positive)) if positive else Exists(f.vars, nnf(f.body, False))
    if isinstance(f, Exists):
        return Exists(f.vars, nnf(f.body, positive)) if positive else Forall(f.vars, nnf(f.body, False))
    raise TypeError(f"not a formula: {f!r}")


def _subst_term(t, env: dict):
    if isinstance(t, str):
        return env.get(t, t)
    if len(t) == 1:
        return t
    return (t[0], *[_subst_term(a, env) for a in t[1:]])


def skolemize(f: Formula, namer: Optional[Namer] = None) -> Formula:
    """Replace existentials by Skolem terms and drop the universal quantifiers.

    Each existential variable becomes ``skN`` applied to every universal
    variable in scope at its binder. Universal variables bound more than once
    are renamed apart so that dropping the quantifiers stays sound.
    """
    namer = namer or Namer(formula_symbols(f))
    used: set[str] = set()

    def walk(f, env: dict, universals: tuple):
        if isinstance(f, Atom):
            return Atom(f.pred, tuple(_subst_term(a, env) for a in f.args)) if env else f
        if isinstance(f, Not):
            return Not(walk(f.arg, env, universals))
        if isinstance(f, (And, Or)):
            return type(f)(walk(f.left, env, universals), walk(f.right, env, universals))
        if isinstance(f, Forall):
            env = dict(env)
            new_vars = []
            for v in f.vars:
                name, k = v, 0
                while name in used:
                    k += 1
                    name = f"{v}_{k}"
                used.add(name)
                env[v] = name
                new_vars.append(name)
            return walk(f.body, env, universals + tuple(new_vars))
        if isinstance(f, Exists):
            env = dict(env)
            for v in f.vars:
                env[v] = (namer.fresh("sk"), *universals)
            return walk(f.body, env, universals)
        raise ClausifyError(f"skolemize expects NNF, got {type(f).__name__}")

    return walk(f, {}, ())


# A clause during conversion is a tuple of Literals whose atoms may still hold
# named (str) variables.

def _literal(f: Formula) -> Literal:
    if isinstance(f, Atom):
        return Literal(False, (intern_symbol(f.pred), *f.args))
    return Literal(True, (intern_symbol(f.arg.pred), *f.arg.args))


def _clause_vars(clauses: Iterable[tuple]) -> list[str]:
    seen: dict[str, None] = {}

    def term(t):
        if isinstance(t, str):
            seen.setdefault(t)
        else:
            for a in t[1:]:
                term(a)

    for c in clauses:
        for l in c:
            for a in l.atom[1:]:
                term(a)
    return list(seen)


class _CNF:
    def __init__(self, mode: str, namer: Namer):
        self.mode = mode
        self.namer = namer
        self.definitions: list[tuple] = []

    def convert(self, f: Formula) -> list[tuple]:
        if isinstance(f, Atom) or isinstance(f, Not):
            atom = f if isinstance(f, Atom) else f.arg
            truth = {"$true": True, "$false": False}.get(atom.pred)
            if truth is not None:
                if isinstance(f, Not):
                    truth = not truth
                return [] if truth else [()]
            return [(_literal(f),)]
        if isinstance(f, And):
            return self.convert(f.left) + self.convert(f.right)
        if isinstance(f, Or):
            a = self.convert(f.left)
            b = self.convert(f.right)
            if self.mode == DEF and len(a) * len(b) > len(a) + len(b):
                if len(a) > len(b):
                    a = self.name(a)
                else:
                    b = self.name(b)
            return [x + y for x, y in itertools.product(a, b)]
        raise ClausifyError(f"cnf expects quantifier-free NNF, got {type(f).__name__}")

    def name(self, clauses: list[tuple]) -> list[tuple]:
        pred = self.namer.fresh("df")
        atom = (pred, *_clause_vars(clauses))
        for c in clauses:
            self.definitions.append((Literal(True, atom),) + c)
        return [(Literal(False, atom),)]


def cnf(f: Formula, mode: str = DEF, namer: Optional[Namer] = None) -> list[tuple]:
    """Clause list for a skolemized NNF formula (definition clauses last)."""
    conv = _CNF(mode, namer or Namer(formula_symbols(f)))
    return conv.convert(f) + conv.definitions


def number_vars(clause: Sequence[Literal]) -> tuple[Literal, ...]:
    """Replace named variables by ids 0, 1, ... in order of first occurrence."""
    ids: dict[str, int] = {}

    def term(t):
        if isinstance(t, str):
            if t not in ids:
                ids[t] = len(ids)
            return ids[t]
        if isinstance(t, int) or len(t) == 1:
            return t
        return (t[0], *[term(a) for a in t[1:]])

    return tuple(Literal(l.neg, (l.atom[0], *[term(a) for a in l.atom[1:]])) for l in clause)


# -- equality ---------------------------------------------------------------

def _eq(a, b) -> tuple:
    return ("=", a, b)


def equality_axioms(functions: Iterable[tuple[str, int]] = (),
                    predicates: Iterable[tuple[str, int]] = ()) -> list[tuple[Literal, ...]]:
    """Reflexivity, symmetry, transitivity and one substitutivity clause per symbol."""
    X, Y, Z = 0, 1, 2
    out = [
        (Literal(False, _eq(X, X)),),
        (Literal(True, _eq(X, Y)), Literal(False, _eq(Y, X))),
        (Literal(True, _eq(X, Y)), Literal(True, _eq(Y, Z)), Literal(False, _eq(X, Z))),
    ]
    for name, n in functions:
        if n == 0:
            continue
        xs, ys = list(range(0, 2 * n, 2)), list(range(1, 2 * n, 2))
        hyps = tuple(Literal(True, _eq(x, y)) for x, y in zip(xs, ys))
        out.append(hyps + (Literal(False, _eq((name, *xs), (name, *ys))),))
    for name, n in predicates:
        if n == 0 or name == "=":
            continue
        xs, ys = list(range(0, 2 * n, 2)), list(range(1, 2 * n, 2))
        hyps = tuple(Literal(True, _eq(x, y)) for x, y in zip(xs, ys))
        out.append(hyps + (Literal(True, (name, *xs)), Literal(False, (name, *ys))))
    return out


def clause_signature(clauses: Iterable[Sequence[Literal]]) -> tuple[list, list]:
    """Function and predicate symbols with arities, in first-occurrence order."""
    funcs: dict[tuple, None] = {}
    preds: dict[tuple, None] = {}

    def term(t):
        if isinstance(t, tuple):
            funcs.setdefault((t[0], len(t) - 1))
            for a in t[1:]:
                term(a)

    for c in clauses:
        for l in c:
            preds.setdefault((l.atom[0], len(l.atom) - 1))
            for a in l.atom[1:]:
                term(a)
    return list(funcs), list(preds)


# -- matrix -----------------------------------------------------------------

@dataclass(frozen=True)
class Clause:
    id: int
    literals: tuple
    ground: bool
    origin: str

    @property
    def is_start(self) -> bool:
        return bool(self.literals) and self.literals[0] == MARKER_LIT


@dataclass(frozen=True)
class ContrapositiveEntry:
    clause_id: int
    literal_index: int
    literal: Literal
    rest: tuple
    ground: bool
    nvars: int


@dataclass
class Matrix:
    clauses: list
    index: dict
    start_mode: str
    start_complete: bool
    start_goal: Literal = START_GOAL
    _by_id: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_id = {c.id: c for c in self.clauses}

    def clause(self, clause_id: int) -> Optional[Clause]:
        return self._by_id.get(clause_id)

    def entries(self, predicate: str, neg: bool) -> list:
        return self.index.get((predicate, neg), [])

    def dump(self) -> str:
        lines = []
        for c in self.clauses:
            body = " | ".join(format_literal(l) for l in c.literals) or "$false"
            lines.append(f"{c.id}: {body}")
        return "\n".join(lines) + "\n"

    def fingerprint(self) -> str:
        return hashlib.sha256(self.dump().encode("utf-8")).hexdigest()

    def base_clauses(self) -> list[tuple[tuple, str]]:
        """Clauses without start markers, with their origins."""
        return [(c.literals[1:] if c.is_start else c.literals, c.origin) for c in self.clauses]

    def with_start_mode(self, start_mode: str) -> "Matrix":
        return assemble_matrix(self.base_clauses(), start_mode)

    @property
    def has_equality(self) -> bool:
        return any(c.origin == EQUALITY_AXIOM for c in self.clauses)


def _all_negative(lits: tuple) -> bool:
    return all(l.neg for l in lits)


def select_start(base: Sequence[tuple[tuple, str]], start_mode: str) -> tuple[set[int], bool]:
    """Indices of start clauses and whether that choice keeps the search complete."""
    positive = {i for i, (lits, _) in enumerate(base) if _all_negative(lits)}
    conj_side = {i for i, (_, origin) in enumerate(base) if origin == CONJECTURE_SIDE}
    if start_mode == CONJ and conj_side:
        chosen = conj_side
    else:
        chosen = positive or conj_side or set(range(len(base)))
    # any unsatisfiable clause set has an all-negative clause in each
    # minimal unsatisfiable subset, so covering them all keeps completeness
    complete = positive <= chosen
    return chosen, complete


def assemble_matrix(base: Sequence[tuple[tuple, str]], start_mode: str = POS,
                    starts: Optional[Iterable[int]] = None) -> Matrix:
    """Index ``base`` (literals, origin) pairs; ``starts`` overrides start selection."""
    chosen, complete = select_start(base, start_mode)
    if starts is not None:
        chosen = set(starts)
        complete = {i for i, (lits, _) in enumerate(base) if _all_negative(lits)} <= chosen
    starts = chosen
    clauses = []
    index: dict[tuple, list] = {}
    for i, (lits, origin) in enumerate(base):
        if i in starts:
            lits = (MARKER_LIT,) + tuple(lits)
        lits = tuple(lits)
        ground = all(is_ground(l) for l in lits)
        clauses.append(Clause(i + 1, lits, ground, origin))
    for c in clauses:
        nvars = max_var(c.literals) + 1
        for k, l in enumerate(c.literals):
            entry = ContrapositiveEntry(c.id, k, l, c.literals[:k] + c.literals[k + 1:], c.ground, nvars)
            index.setdefault((l.predicate, l.neg), []).append(entry)
    return Matrix(clauses, index, start_mode, complete)


def build_matrix(formulas: Sequence[AnnotatedFormula], mode: str = DEF,
                 start_mode: Optional[str] = None, equality: bool = True) -> Matrix:
    """Clausify ``axioms & ~conjecture`` and index it.

    Several conjectures are conjoined before negation. ``start_mode`` defaults
    to CONJ when the problem has a conjecture and POS otherwise.
    """
    if not formulas:
        raise ClausifyError("problem has no formulas")
    taken: set[str] = set()
    for af in formulas:
        taken |= formula_symbols(af.formula)
    namer = Namer(taken)

    sources: list[tuple[Formula, str]] = []
    conjectures = []
    for af in formulas:
        if af.role in AXIOM_ROLES:
            sources.append((af.formula, AXIOM_SIDE))
        elif af.role == "conjecture":
            conjectures.append(af.formula)
        elif af.role == "negated_conjecture":
            sources.append((af.formula, CONJECTURE_SIDE))
        else:
            raise ClausifyError(f"unsupported role {af.role!r} in {af.name}")
    if conjectures:
        sources.append((Not(conj(*conjectures)), CONJECTURE_SIDE))

    base: list[tuple[tuple, str]] = []
    for f, origin in sources:
        conv = _CNF(mode, namer)
        main = conv.convert(skolemize(nnf(f), namer))
        base.extend((number_vars(c), origin) for c in main)
        base.extend((number_vars(c), DEFINITION) for c in conv.definitions)

    if equality and any(l.predicate == "=" for c, _ in base for l in c):
        funcs, preds = clause_signature(c for c, _ in base)
        base.extend((c, EQUALITY_AXIOM) for c in equality_axioms(funcs, preds))

    if start_mode is None:
        start_mode = CONJ if any(o == CONJECTURE_SIDE for _, o in base) else POS
    return assemble_matrix(base, start_mode)


def matrix_from_clauses(clauses: Sequence[Sequence[Literal]], start_mode: str = POS,
                        conjecture: Iterable[int] = (), starts: Optional[Iterable[int]] = None) -> Matrix:
    """Matrix from ready-made integer-variable clauses.

    ``conjecture`` and ``starts`` are 0-based positions in ``clauses``.
    """
    conj_idx = set(conjecture)
    base = [(tuple(c), CONJECTURE_SIDE if i in conj_idx else AXIOM_SIDE) for i, c in enumerate(clauses)]
    return assemble_matrix(base, start_mode, starts)
