import pytest
from hypothesis import given, settings, strategies as st

from ctprover.tptp import (
    And,
    AnnotatedFormula,
    Atom,
    Exists,
    Forall,
    Iff,
    Implies,
    IncludeError,
    Not,
    Or,
    TPTPSyntaxError,
    free_vars,
    parse_file,
    parse_formula,
    parse_problem,
    print_annotated,
    print_formula,
)


def test_parse_examples():
    [af] = parse_problem("fof(a1, axiom, p(c)).")
    assert af == AnnotatedFormula("a1", "axiom", Atom("p", (("c",),)))

    [g] = parse_problem("fof(g, conjecture, ![X]: (p(X) => p(X))).")
    assert g.role == "conjecture"
    assert g.formula == Forall(("X",), Implies(Atom("p", ("X",)), Atom("p", ("X",))))

    [c] = parse_problem("cnf(c1, axiom, (~p(X) | q(X))).")
    assert c.language == "cnf"
    assert c.formula == Forall(("X",), Or(Not(Atom("p", ("X",))), Atom("q", ("X",))))


def test_print_examples():
    assert print_formula(Atom("p", (("c",),))) == "p(c)"
    assert print_formula(Not(And(Atom("p"), Atom("q")))) == "~(p & q)"


def test_precedence_and_desugaring():
    f = parse_formula("p & q | r => s")
    assert f == Implies(Or(And(Atom("p"), Atom("q")), Atom("r")), Atom("s"))
    assert parse_formula("p <= q") == Implies(Atom("q"), Atom("p"))
    assert parse_formula("p <~> q") == Not(Iff(Atom("p"), Atom("q")))
    assert parse_formula("p ~| q") == Not(Or(Atom("p"), Atom("q")))
    assert parse_formula("p ~& q") == Not(And(Atom("p"), Atom("q")))
    assert parse_formula("a != b") == Not(Atom("=", (("a",), ("b",))))
    # chains of one associative connective nest to the right
    assert parse_formula("p & q & r") == And(Atom("p"), And(Atom("q"), Atom("r")))


def test_quantifier_scope_and_shadowing():
    f = parse_formula("![X]: (p(X) & ?[X]: q(X))")
    assert isinstance(f, Forall)
    inner = f.body.right
    assert isinstance(inner, Exists) and inner.vars[0] != "X"
    assert inner.body == Atom("q", (inner.vars[0],))


def test_free_variables_are_closed_in_fof():
    [af] = parse_problem("fof(a, axiom, p(X)).")
    assert isinstance(af.formula, Forall) and free_vars(af.formula) == []


def test_comments_and_quoted_names():
    text = "% header\nfof('my name', axiom, 'Big'(c)). /* block */\n"
    [af] = parse_problem(text)
    assert af.name == "my name" and af.formula.pred == "Big"


def test_syntax_error_location():
    with pytest.raises(TPTPSyntaxError) as exc:
        parse_problem("fof(a, axiom, p(c)).\nfof(b, axiom, (p & )).")
    assert exc.value.line == 2
    assert exc.value.token == ")"


def test_unknown_role_rejected():
    with pytest.raises(TPTPSyntaxError):
        parse_problem("fof(a, plain, p).")


def test_include_expansion_and_selection():
    files = {
        "Axioms/A.ax": "fof(a1, axiom, p). fof(a2, axiom, q).",
    }
    text = "include('Axioms/A.ax', [a2]).\nfof(g, conjecture, q)."
    out = parse_problem(text, files.__getitem__)
    assert [f.name for f in out] == ["a2", "g"]


def test_include_missing_and_cycle():
    with pytest.raises(IncludeError) as exc:
        parse_problem("include('nope.ax').", {}.__getitem__)
    assert exc.value.path == "nope.ax"
    files = {"a.ax": "include('b.ax').", "b.ax": "include('a.ax')."}
    with pytest.raises(IncludeError, match="cycle"):
        parse_problem("include('a.ax').", files.__getitem__)


def test_parse_file_with_include_dir(tmp_path, monkeypatch):
    monkeypatch.delenv("TPTP", raising=False)
    axdir = tmp_path / "ax"
    (axdir / "Axioms").mkdir(parents=True)
    (axdir / "Axioms" / "T.ax").write_text("fof(t, axiom, p(a)).")
    prob = tmp_path / "prob.p"
    prob.write_text("include('Axioms/T.ax').\nfof(g, conjecture, p(a)).")
    assert [f.name for f in parse_file(prob, include_dir=axdir)] == ["t", "g"]
    monkeypatch.setenv("TPTP", str(axdir))
    assert [f.name for f in parse_file(prob)] == ["t", "g"]


# -- round trip -------------------------------------------------------------

VARS = ["X", "Y", "Z"]


def fterms(depth=2):
    leaf = st.one_of(st.sampled_from(VARS), st.sampled_from([("a",), ("b",)]))
    if depth == 0:
        return leaf
    sub = fterms(depth - 1)
    return st.one_of(leaf, st.builds(lambda x: ("f", x), sub), st.builds(lambda x, y: ("g", x, y), sub, sub))


atoms = st.one_of(
    st.builds(lambda: Atom("p")),
    st.builds(lambda t: Atom("q", (t,)), fterms()),
    st.builds(lambda s, t: Atom("r", (s, t)), fterms(1), fterms(1)),
    st.builds(lambda s, t: Atom("=", (s, t)), fterms(1), fterms(1)),
)


def formulas():
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.builds(Not, kids),
            st.builds(And, kids, kids),
            st.builds(Or, kids, kids),
            st.builds(Implies, kids, kids),
            st.builds(Iff, kids, kids),
            st.builds(lambda v, b: Forall((v,), b), st.sampled_from(VARS), kids),
            st.builds(lambda v, b: Exists((v,), b), st.sampled_from(VARS), kids),
        ),
        max_leaves=8)


def closed(f):
    fv = free_vars(f)
    return Forall(tuple(fv), f) if fv else f


def canon(f, env=None, counter=None):
    """Rename bound variables to B0, B1, ... in binder order."""
    env = env or {}
    counter = counter if counter is not None else [0]

    def term(t):
        if isinstance(t, str):
            return env.get(t, t)
        return (t[0], *[term(x) for x in t[1:]])

    if isinstance(f, Atom):
        return Atom(f.pred, tuple(term(t) for t in f.args))
    if isinstance(f, Not):
        return Not(canon(f.arg, env, counter))
    if isinstance(f, (Forall, Exists)):
        inner = dict(env)
        names = []
        for v in f.vars:
            inner[v] = f"B{counter[0]}"
            names.append(inner[v])
            counter[0] += 1
        return type(f)(tuple(names), canon(f.body, inner, counter))
    return type(f)(canon(f.left, env, counter), canon(f.right, env, counter))


def roundtrip_once(f) -> bool:
    g = closed(f)
    return canon(parse_formula(print_formula(g))) == canon(g)


@settings(max_examples=400)
@given(formulas())
def test_print_parse_roundtrip(f):
    assert roundtrip_once(f)


@settings(max_examples=100)
@given(formulas())
def test_annotated_roundtrip(f):
    af = AnnotatedFormula("ax1", "axiom", closed(f))
    [back] = parse_problem(print_annotated(af))
    [again] = parse_problem(print_annotated(back))
    assert back == again
