"""Regenerate src/ctprover/corpus/ from the problem table below."""

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "ctprover" / "corpus"

# name -> (comment, [(role, formula)])
PROBLEMS = {
    "PEL01": ("Pelletier 1", [("conjecture", "(p => q) <=> (~q => ~p)")]),
    "PEL02": ("Pelletier 2", [("conjecture", "~~p <=> p")]),
    "PEL03": ("Pelletier 3", [("conjecture", "~(p => q) => (q => p)")]),
    "PEL04": ("Pelletier 4", [("conjecture", "(~p => q) <=> (~q => p)")]),
    "PEL05": ("Pelletier 5", [("conjecture", "((p | q) => (p | r)) => (p | (q => r))")]),
    "PEL06": ("Pelletier 6", [("conjecture", "p | ~p")]),
    "PEL07": ("Pelletier 7", [("conjecture", "p | ~~~p")]),
    "PEL08": ("Pelletier 8", [("conjecture", "((p => q) => p) => p")]),
    "PEL09": ("Pelletier 9", [("conjecture", "((p | q) & (~p | q) & (p | ~q)) => ~(~p | ~q)")]),
    "PEL10": ("Pelletier 10", [
        ("axiom", "q => r"),
        ("axiom", "r => (p & q)"),
        ("axiom", "p => (q | r)"),
        ("conjecture", "p <=> q")]),
    "PEL11": ("Pelletier 11", [("conjecture", "p <=> p")]),
    "PEL12": ("Pelletier 12", [("conjecture", "((p <=> q) <=> r) <=> (p <=> (q <=> r))")]),
    "PEL13": ("Pelletier 13", [("conjecture", "(p | (q & r)) <=> ((p | q) & (p | r))")]),
    "PEL14": ("Pelletier 14", [("conjecture", "(p <=> q) <=> ((q | ~p) & (~q | p))")]),
    "PEL15": ("Pelletier 15", [("conjecture", "(p => q) <=> (~p | q)")]),
    "PEL16": ("Pelletier 16", [("conjecture", "(p => q) | (q => p)")]),
    "PEL17": ("Pelletier 17", [
        ("conjecture", "((p & (q => r)) => s) <=> ((~p | q | s) & (~p | ~r | s))")]),
    "PEL18": ("Pelletier 18", [("conjecture", "?[Y]: ![X]: (f(Y) => f(X))")]),
    "PEL19": ("Pelletier 19", [
        ("conjecture", "?[X]: ![Y, Z]: ((p(Y) => q(Z)) => (p(X) => q(X)))")]),
    "PEL20": ("Pelletier 20", [
        ("conjecture", "(![X, Y]: ?[Z]: ![W]: ((p(X) & q(Y)) => (r(Z) & s(W)))) => "
                       "((?[X1, Y1]: (p(X1) & q(Y1))) => (?[Z1]: r(Z1)))")]),
    "PEL21": ("Pelletier 21", [
        ("axiom", "?[X]: (p => f(X))"),
        ("axiom", "?[X]: (f(X) => p)"),
        ("conjecture", "?[X]: (p <=> f(X))")]),
    "PEL22": ("Pelletier 22", [("conjecture", "(![X]: (p & f(X))) <=> (p & (![X]: f(X)))")]),
    "PEL23": ("Pelletier 23", [("conjecture", "(![X]: (p | f(X))) <=> (p | (![X]: f(X)))")]),
    "PEL24": ("Pelletier 24", [
        ("axiom", "~(?[X]: (s(X) & q(X)))"),
        ("axiom", "![X]: (p(X) => (q(X) | r(X)))"),
        ("axiom", "(~(?[X]: p(X))) => (?[Y]: q(Y))"),
        ("axiom", "![X]: ((q(X) | r(X)) => s(X))"),
        ("conjecture", "?[X]: (p(X) & r(X))")]),
    "PEL25": ("Pelletier 25", [
        ("axiom", "?[X]: p(X)"),
        ("axiom", "![X]: (f(X) => (~g(X) & r(X)))"),
        ("axiom", "![X]: (p(X) => (g(X) & f(X)))"),
        ("axiom", "(![X]: (p(X) => q(X))) | (?[X]: (p(X) & r(X)))"),
        ("conjecture", "?[X]: (q(X) & p(X))")]),
    "PEL26": ("Pelletier 26", [
        ("axiom", "(?[X]: p(X)) <=> (?[X]: q(X))"),
        ("axiom", "![X, Y]: ((p(X) & q(Y)) => (r(X) <=> s(Y)))"),
        ("conjecture", "(![X]: (p(X) => r(X))) <=> (![X]: (q(X) => s(X)))")]),
    "PEL27": ("Pelletier 27", [
        ("axiom", "?[X]: (f(X) & ~g(X))"),
        ("axiom", "![X]: (f(X) => h(X))"),
        ("axiom", "![X]: ((j(X) & i(X)) => f(X))"),
        ("axiom", "(?[X]: (h(X) & ~g(X))) => (![X]: (i(X) => ~h(X)))"),
        ("conjecture", "![X]: (j(X) => ~i(X))")]),
    "PEL28": ("Pelletier 28", [
        ("axiom", "![X]: (p(X) => (![Y]: q(Y)))"),
        ("axiom", "(![X]: (q(X) | r(X))) => (?[X]: (q(X) & s(X)))"),
        ("axiom", "(?[X]: s(X)) => (![X]: (f(X) => g(X)))"),
        ("conjecture", "![X]: ((p(X) & f(X)) => g(X))")]),
    "PEL29": ("Pelletier 29", [
        ("axiom", "?[X]: f(X)"),
        ("axiom", "?[X]: g(X)"),
        ("conjecture", "((![X]: (f(X) => h(X))) & (![X]: (g(X) => j(X)))) <=> "
                       "(![X, Y]: ((f(X) & g(Y)) => (h(X) & j(Y))))")]),
    "PEL30": ("Pelletier 30", [
        ("axiom", "![X]: ((f(X) | g(X)) => ~h(X))"),
        ("axiom", "![X]: ((g(X) => ~i(X)) => (f(X) & h(X)))"),
        ("conjecture", "![X]: i(X)")]),
    "PEL31": ("Pelletier 31", [
        ("axiom", "~(?[X]: (f(X) & (g(X) | h(X))))"),
        ("axiom", "?[X]: (i(X) & f(X))"),
        ("axiom", "![X]: (~h(X) => j(X))"),
        ("conjecture", "?[X]: (i(X) & j(X))")]),
    "PEL32": ("Pelletier 32", [
        ("axiom", "![X]: ((f(X) & (g(X) | h(X))) => i(X))"),
        ("axiom", "![X]: ((i(X) & h(X)) => j(X))"),
        ("axiom", "![X]: (k(X) => h(X))"),
        ("conjecture", "![X]: ((f(X) & k(X)) => j(X))")]),
    "PEL33": ("Pelletier 33", [
        ("conjecture", "(![X]: ((p(a) & (p(X) => p(b))) => p(c))) <=> "
                       "(![X]: ((~p(a) | p(X) | p(c)) & (~p(a) | ~p(b) | p(c))))")]),
    "PEL34": ("Pelletier 34 (Andrews)", [
        ("conjecture", "((?[X]: ![Y]: (p(X) <=> p(Y))) <=> ((?[X]: q(X)) <=> (![Y]: q(Y)))) <=> "
                       "((?[X]: ![Y]: (q(X) <=> q(Y))) <=> ((?[X]: p(X)) <=> (![Y]: p(Y))))")]),
    "PEL35": ("Pelletier 35", [("conjecture", "?[U, V]: (p(U, V) => (![X, Y]: p(X, Y)))")]),
    "PEL36": ("Pelletier 36", [
        ("axiom", "![X]: ?[Y]: f(X, Y)"),
        ("axiom", "![X]: ?[Y]: g(X, Y)"),
        ("axiom", "![X, Y]: ((f(X, Y) | g(X, Y)) => (![Z]: ((f(Y, Z) | g(Y, Z)) => h(X, Z))))"),
        ("conjecture", "![X]: ?[Y]: h(X, Y)")]),
    "PEL37": ("Pelletier 37", [
        ("axiom", "![Z]: ?[W]: ![X]: ?[Y]: ((p(X, Z) => p(Y, W)) & p(Y, Z) & "
                  "(p(Y, W) => (?[U]: q(U, W))))"),
        ("axiom", "![X, Z]: (~p(X, Z) => (?[Y]: q(Y, Z)))"),
        ("axiom", "(?[X, Y]: q(X, Y)) => (![X]: r(X, X))"),
        ("conjecture", "![X]: ?[Y]: r(X, Y)")]),
    "PEL39": ("Pelletier 39", [("conjecture", "~(?[X]: ![Y]: (f(Y, X) <=> ~f(Y, Y)))")]),
    "PEL40": ("Pelletier 40", [
        ("conjecture", "(?[Y]: ![X]: (f(X, Y) <=> f(X, X))) => "
                       "~(![X]: ?[Y]: ![Z]: (f(Z, Y) <=> ~f(Z, X)))")]),
    "PEL41": ("Pelletier 41", [
        ("axiom", "![Z]: ?[Y]: ![X]: (f(X, Y) <=> (f(X, Z) & ~f(X, X)))"),
        ("conjecture", "~(?[Z]: ![X]: f(X, Z))")]),
    "PEL42": ("Pelletier 42", [
        ("conjecture", "~(?[Y]: ![X]: (f(X, Y) <=> ~(?[Z]: (f(X, Z) & f(Z, X)))))")]),
    "PEL43": ("Pelletier 43", [
        ("axiom", "![X, Y]: (q(X, Y) <=> (![Z]: (f(Z, X) <=> f(Z, Y))))"),
        ("conjecture", "![X, Y]: (q(X, Y) <=> q(Y, X))")]),
    "PEL44": ("Pelletier 44", [
        ("axiom", "![X]: (f(X) => ((?[Y]: (g(Y) & h(X, Y))) & (?[Y]: (g(Y) & ~h(X, Y)))))"),
        ("axiom", "?[X]: (j(X) & (![Y]: (g(Y) => h(X, Y))))"),
        ("conjecture", "?[X]: (j(X) & ~f(X))")]),
    "PEL45": ("Pelletier 45", [
        ("axiom", "![X]: ((f(X) & (![Y]: ((g(Y) & h(X, Y)) => j(X, Y)))) => "
                  "(![Y]: ((g(Y) & h(X, Y)) => k(Y))))"),
        ("axiom", "~(?[Y]: (l(Y) & k(Y)))"),
        ("axiom", "?[X]: (f(X) & (![Y]: (h(X, Y) => l(Y))) & "
                  "(![Y]: ((g(Y) & h(X, Y)) => j(X, Y))))"),
        ("conjecture", "?[X]: (f(X) & ~(?[Y]: (g(Y) & h(X, Y))))")]),
    "PEL46": ("Pelletier 46", [
        ("axiom", "![X]: ((f(X) & (![Y]: ((f(Y) & h(Y, X)) => g(Y)))) => g(X))"),
        ("axiom", "(?[X]: (f(X) & ~g(X))) => "
                  "(?[X]: (f(X) & ~g(X) & (![Y]: ((f(Y) & ~g(Y)) => j(X, Y)))))"),
        ("axiom", "![X, Y]: ((f(X) & f(Y) & h(X, Y)) => ~j(Y, X))"),
        ("conjecture", "![X]: (f(X) => g(X))")]),
    "PEL50": ("Pelletier 50", [
        ("conjecture", "(![X]: (f(a, X) | (![Y]: f(X, Y)))) => (?[X]: ![Y]: f(X, Y))")]),

    # equality through the injected axioms
    "EQU01": ("transitivity of equality", [
        ("axiom", "a = b"), ("axiom", "b = c"), ("conjecture", "a = c")]),
    "EQU02": ("symmetry of equality", [("axiom", "a = b"), ("conjecture", "b = a")]),
    "EQU03": ("function congruence", [("axiom", "a = b"), ("conjecture", "f(a) = f(b)")]),
    "EQU04": ("predicate congruence", [
        ("axiom", "a = b"), ("axiom", "p(a)"), ("conjecture", "p(b)")]),
    "EQU05": ("rewriting twice with a unit equation", [
        ("axiom", "f(a) = a"), ("conjecture", "f(f(a)) = a")]),
    "EQU06": ("Pelletier 48", [
        ("axiom", "a = b | c = d"), ("axiom", "a = c | b = d"),
        ("conjecture", "a = d | b = c")]),
    "EQU07": ("universally quantified equation", [
        ("axiom", "![X]: f(X) = g(X)"), ("axiom", "p(f(a))"), ("conjecture", "p(g(a))")]),
    "EQU08": ("disequality from distinct properties", [
        ("axiom", "p(a)"), ("axiom", "~p(b)"), ("conjecture", "a != b")]),
    "EQU09": ("Pelletier 49", [
        ("axiom", "?[X, Y]: ![Z]: (Z = X | Z = Y)"),
        ("axiom", "p(a) & p(b)"), ("axiom", "a != b"),
        ("conjecture", "![X]: p(X)")]),
    "EQU10": ("left identity is unique", [
        ("axiom", "![X]: m(e, X) = X"), ("axiom", "![X]: m(X, i) = X"),
        ("conjecture", "e = i")]),

    # satisfiable: complete search must answer CounterSatisfiable
    "SAT01": ("propositional non-theorem", [("axiom", "p | q"), ("conjecture", "p")]),
    "SAT02": ("wrong instance", [
        ("axiom", "![X]: (p(X) => q(X))"), ("axiom", "p(a)"), ("conjecture", "q(b)")]),
    "SAT03": ("converse of an implication", [
        ("axiom", "![X]: (p(X) => q(X))"), ("conjecture", "![X]: (q(X) => p(X))")]),
    "SAT04": ("propositional chain missing a link", [
        ("axiom", "p => q"), ("axiom", "r => s"), ("axiom", "p"), ("conjecture", "s")]),

    # goal-directed: a distractor cluster with an all-negative axiom clause
    "GDI01": ("chain with a distractor axiom", [
        ("axiom", "![X]: ~(d(X) & e(X))"),
        ("axiom", "![X]: (e(X) => e(s(X)))"),
        ("axiom", "![X]: (d(s(X)) => d(X))"),
        ("axiom", "p(a)"),
        ("axiom", "![X]: (p(X) => q(X))"),
        ("axiom", "![X]: (q(X) => r(X))"),
        ("conjecture", "r(a)")]),
    "GDI02": ("transitive closure, distractor first", [
        ("axiom", "![X, Y]: ~(lt(X, Y) & lt(Y, X) & strict(X))"),
        ("axiom", "![X, Y, Z]: ((lt(X, Y) & lt(Y, Z)) => lt(X, Z))"),
        ("axiom", "lt(a, b)"), ("axiom", "lt(b, c)"), ("axiom", "lt(c, d)"),
        ("conjecture", "lt(a, d)")]),
    "GDI03": ("successor arithmetic, distractor first", [
        ("axiom", "![X]: ~(nat(X) & neg(X))"),
        ("axiom", "![X]: (neg(s(X)) => neg(X))"),
        ("axiom", "nat(z)"),
        ("axiom", "![X]: (nat(X) => nat(s(X)))"),
        ("conjecture", "nat(s(s(s(z))))")]),
    "GDI04": ("set membership, distractor first", [
        ("axiom", "![X, S]: ~(member(X, S) & empty(S))"),
        ("axiom", "![S]: (empty(S) => empty(sub(S)))"),
        ("axiom", "![X, A, B]: ((member(X, A) & subset(A, B)) => member(X, B))"),
        ("axiom", "![A, B, C]: ((subset(A, B) & subset(B, C)) => subset(A, C))"),
        ("axiom", "subset(s1, s2)"), ("axiom", "subset(s2, s3)"), ("axiom", "member(x, s1)"),
        ("conjecture", "member(x, s3)")]),
    "GDI05": ("family relations, distractor first", [
        ("axiom", "![X]: ~(parent(X, X) & adam(X))"),
        ("axiom", "![X]: (adam(X) => adam(father(X)))"),
        ("axiom", "![X, Y, Z]: ((parent(X, Y) & parent(Y, Z)) => grandparent(X, Z))"),
        ("axiom", "![X, Y, Z]: ((grandparent(X, Y) & parent(Y, Z)) => ancestor(X, Z))"),
        ("axiom", "parent(ann, bob)"), ("axiom", "parent(bob, cid)"), ("axiom", "parent(cid, dee)"),
        ("conjecture", "ancestor(ann, dee)")]),
    "GDI06": ("list append, distractor first", [
        ("axiom", "![X]: ~(list(X) & bad(X))"),
        ("axiom", "![X, Y]: (bad(cons(X, Y)) => bad(Y))"),
        ("axiom", "![L]: app(nil, L, L)"),
        ("axiom", "![X, L, M, N]: (app(L, M, N) => app(cons(X, L), M, cons(X, N)))"),
        ("conjecture", "?[R]: app(cons(a, cons(b, nil)), cons(c, nil), R)")]),
    "GDI07": ("two-step modus ponens, distractor first", [
        ("axiom", "![X, Y]: ~(r(X, Y) & r(Y, X) & t(X))"),
        ("axiom", "![X]: (t(X) => t(g(X)))"),
        ("axiom", "![X]: (p(X) => ?[Y]: r(X, Y))"),
        ("axiom", "![X, Y]: (r(X, Y) => q(X))"),
        ("axiom", "p(a)"),
        ("conjecture", "q(a)")]),
    "GDI08": ("Schubert-style syllogism chain", [
        ("axiom", "![X]: ~(wolf(X) & grain(X))"),
        ("axiom", "![X]: (wolf(X) => animal(X))"),
        ("axiom", "![X]: (fox(X) => animal(X))"),
        ("axiom", "![X]: (animal(X) => living(X))"),
        ("axiom", "![X]: (living(X) => mortal(X))"),
        ("axiom", "fox(f0)"),
        ("conjecture", "?[X]: mortal(X)")]),
}

CNF_PROBLEMS = {
    "CNF01": ("clausal input with a negated conjecture", [
        ("axiom", "p(a)"),
        ("axiom", "~p(X) | p(f(X))"),
        ("negated_conjecture", "~p(f(f(a)))")]),
    "CNF02": ("clausal input, propositional", [
        ("axiom", "p | q"), ("axiom", "~p | q"), ("axiom", "p | ~q"),
        ("negated_conjecture", "~p | ~q")]),
}


def theory_problem(seed: int, npred: int = 24, distractors: int = 70, depth: int = 8):
    """A derivation chain of ``depth`` rule applications hidden among distractor axioms."""
    rng = random.Random(seed)
    preds = [f"p{i}" for i in range(npred)]
    chain = rng.sample(preds, depth + 1)
    consts = [f"c{i}" for i in range(depth + 1)]
    axioms = [f"{chain[0]}({consts[0]})"]
    for i in range(depth):
        axioms.append(f"r({consts[i]}, {consts[i + 1]})")
        axioms.append(f"![X, Y]: (({chain[i]}(X) & r(X, Y)) => {chain[i + 1]}(Y))")
    for _ in range(distractors):
        a, b, c = rng.sample(preds, 3)
        form = rng.randrange(4)
        if form == 0:
            axioms.append(f"![X]: (({a}(X) & {b}(X)) => {c}(X))")
        elif form == 1:
            axioms.append(f"![X, Y]: (({a}(X) & r(Y, X)) => {b}(Y))")
        elif form == 2:
            axioms.append(f"![X]: ({a}(X) => {b}(f(X)))")
        else:
            axioms.append(f"![X]: ~({a}(X) & {b}(X) & {c}(X))")
    items = [("axiom", a) for a in axioms] + [("conjecture", f"{chain[-1]}({consts[-1]})")]
    return f"random theory, seed {seed}, chain depth {depth}, {distractors} distractors", items


def render(name, comment, items, lang):
    lines = [f"% {name}: {comment}"]
    for k, (role, text) in enumerate(items, 1):
        label = "goal" if role == "conjecture" else f"{role[:3]}{k}"
        lines.append(f"{lang}({label}, {role}, ({text})).")
    return "\n".join(lines) + "\n"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.p"):
        old.unlink()
    for name, (comment, items) in PROBLEMS.items():
        (OUT / f"{name}.p").write_text(render(name, comment, items, "fof"))
    for seed in range(12):
        comment, items = theory_problem(seed, depth=6 + seed % 6)
        (OUT / f"GDT{seed:02d}.p").write_text(render(f"GDT{seed:02d}", comment, items, "fof"))
    for name, (comment, items) in CNF_PROBLEMS.items():
        (OUT / f"{name}.p").write_text(render(name, comment, items, "cnf"))


if __name__ == "__main__":
    main()
