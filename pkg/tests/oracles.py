"""Reference implementations the tests compare against.

None of these share code with the prover beyond the term representation.
"""

from __future__ import annotations

import itertools
import random

from ctprover.tptp import And, Atom, Exists, Forall, Iff, Implies, Not, Or


# -- propositional truth tables ---------------------------------------------

def eval_formula(f, env: dict) -> bool:
    if isinstance(f, Atom):
        if f.pred == "$true":
            return True
        if f.pred == "$false":
            return False
        return env[f.pred]
    if isinstance(f, Not):
        return not eval_formula(f.arg, env)
    if isinstance(f, And):
        return eval_formula(f.left, env) and eval_formula(f.right, env)
    if isinstance(f, Or):
        return eval_formula(f.left, env) or eval_formula(f.right, env)
    if isinstance(f, Implies):
        return (not eval_formula(f.left, env)) or eval_formula(f.right, env)
    if isinstance(f, Iff):
        return eval_formula(f.left, env) == eval_formula(f.right, env)
    raise TypeError(f"not propositional: {f!r}")


def prop_atoms(f, out=None) -> set:
    out = set() if out is None else out
    if isinstance(f, Atom):
        if f.pred not in ("$true", "$false"):
            out.add(f.pred)
    elif isinstance(f, Not):
        prop_atoms(f.arg, out)
    elif isinstance(f, (Forall, Exists)):
        prop_atoms(f.body, out)
    else:
        prop_atoms(f.left, out)
        prop_atoms(f.right, out)
    return out


def formulas_unsat(formulas) -> bool:
    """True iff the conjunction of the propositional ``formulas`` has no model."""
    atoms = sorted(set().union(*(prop_atoms(f) for f in formulas)) if formulas else set())
    for values in itertools.product((False, True), repeat=len(atoms)):
        env = dict(zip(atoms, values))
        if all(eval_formula(f, env) for f in formulas):
            return False
    return True


def clauses_unsat_tt(clauses) -> bool:
    """Truth-table unsatisfiability for clauses of (negated, atom-name) pairs."""
    atoms = sorted({a for c in clauses for _, a in c})
    for values in itertools.product((False, True), repeat=len(atoms)):
        env = dict(zip(atoms, values))
        if all(any(env[a] != neg for neg, a in c) for c in clauses):
            return False
    return True


# -- ground clause sets -----------------------------------------------------

def dpll_unsat(clauses) -> bool:
    """Unsatisfiability of ground clauses given as iterables of (neg, atom) pairs."""
    cls = [frozenset((bool(n), a) for n, a in c) for c in clauses]
    return not _dpll(cls)


def _dpll(clauses: list) -> bool:
    while True:
        if any(not c for c in clauses):
            return False
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        clauses = _assign(clauses, next(iter(unit)))
    if not clauses:
        return True
    lit = next(iter(clauses[0]))
    return _dpll(_assign(clauses, lit)) or _dpll(_assign(clauses, (not lit[0], lit[1])))


def _assign(clauses: list, lit: tuple) -> list:
    neg, atom = lit
    out = []
    for c in clauses:
        if lit in c:
            continue
        out.append(c - {(not neg, atom)})
    return out


# -- brute-force unification ------------------------------------------------

def term_universe(functions, constants, variables, depth: int) -> list:
    """All terms up to ``depth`` over the given signature (variables are ints)."""
    layer = [(c,) for c in constants] + list(variables)
    terms = list(layer)
    for _ in range(depth):
        new = []
        for name, arity in functions:
            for args in itertools.product(terms, repeat=arity):
                t = (name, *args)
                if t not in terms and t not in new:
                    new.append(t)
        terms = terms + new
    return terms


def substitute(t, sigma: dict):
    if isinstance(t, int):
        return sigma.get(t, t)
    if len(t) == 1:
        return t
    return (t[0], *[substitute(a, sigma) for a in t[1:]])


def compose(first: dict, then: dict) -> dict:
    """Substitution applying ``first`` and then ``then``."""
    out = {v: substitute(t, then) for v, t in first.items()}
    for v, t in then.items():
        out.setdefault(v, t)
    return {v: t for v, t in out.items() if t != v}


def match_subst(pattern, target, theta: dict) -> bool:
    """One-way matching: theta(pattern) == target, variables of target fixed."""
    if isinstance(pattern, int):
        if pattern in theta:
            return theta[pattern] == target
        theta[pattern] = target
        return True
    if isinstance(target, int) or pattern[0] != target[0] or len(pattern) != len(target):
        return False
    return all(match_subst(p, t, theta) for p, t in zip(pattern[1:], target[1:]))


def brute_unifiers(s, t, variables, candidates) -> list:
    """Every substitution over ``variables`` with images in ``candidates`` unifying s and t."""
    found = []
    for images in itertools.product(candidates, repeat=len(variables)):
        sigma = {v: im for v, im in zip(variables, images) if im != v}
        if substitute(s, sigma) == substitute(t, sigma):
            found.append(sigma)
    return found


def more_general(mgu: dict, other: dict, variables) -> bool:
    """True iff ``other`` = ``mgu`` composed with some substitution, on ``variables``."""
    theta: dict = {}
    for v in variables:
        if not match_subst(substitute(v, mgu), substitute(v, other), theta):
            return False
    return True


# -- random problem generators ----------------------------------------------

def random_prop_clauses(rng: random.Random, max_atoms: int = 4, max_clauses: int = 6):
    atoms = [f"a{i}" for i in range(rng.randint(1, max_atoms))]
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        width = rng.randint(1, min(3, len(atoms)))
        chosen = rng.sample(atoms, width)
        clauses.append([(rng.random() < 0.5, a) for a in chosen])
    return clauses


def cnf_problem_text(clauses, conjecture_idx=()) -> str:
    lines = []
    for i, c in enumerate(clauses):
        role = "negated_conjecture" if i in conjecture_idx else "axiom"
        body = " | ".join(("~" if neg else "") + a for neg, a in c)
        lines.append(f"cnf(c{i}, {role}, ({body})).")
    return "\n".join(lines) + "\n"
