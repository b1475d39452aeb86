"""Reader and printer for the FOF/CNF dialects of TPTP.

Terms inside formulas use named variables: a ``str`` is a variable, a tuple
``(symbol, *args)`` is a compound (the same shape as :mod:`ctprover.terms`
compounds). Variables only get integer ids during clausification.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Optional, Union

from .terms import format_symbol, intern_symbol

ROLES = frozenset(
    {"axiom", "hypothesis", "definition", "lemma", "theorem", "conjecture", "negated_conjecture"}
)


class TPTPError(ValueError):
    pass


class TPTPSyntaxError(TPTPError):
    def __init__(self, message: str, line: int, col: int, token: str, source: str = "<input>"):
        self.line, self.col, self.token, self.source = line, col, token, source
        super().__init__(f"{source}:{line}:{col}: {message} (at {token!r})")


class IncludeError(TPTPError):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"cannot include {path!r}: {reason}")


# -- formula AST ------------------------------------------------------------

FTerm = Union[str, tuple]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    vars: tuple
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: tuple
    body: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Iff, Forall, Exists]

TRUE = Atom("$true")
FALSE = Atom("$false")


@dataclass(frozen=True)
class AnnotatedFormula:
    name: str
    role: str
    formula: Formula
    language: str = "fof"


def eq(left: FTerm, right: FTerm) -> Atom:
    return Atom("=", (left, right))


def conj(*fs: Formula) -> Formula:
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = And(f, out)
    return out


def disj(*fs: Formula) -> Formula:
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = Or(f, out)
    return out


def free_vars(f: Formula, bound: frozenset = frozenset()) -> list[str]:
    """Free variables in order of first occurrence."""
    seen: dict[str, None] = {}

    def term(t, bound):
        if isinstance(t, str):
            if t not in bound:
                seen.setdefault(t)
        else:
            for a in t[1:]:
                term(a, bound)

    def walk(f, bound):
        if isinstance(f, Atom):
            for a in f.args:
                term(a, bound)
        elif isinstance(f, Not):
            walk(f.arg, bound)
        elif isinstance(f, (Forall, Exists)):
            walk(f.body, bound | set(f.vars))
        else:
            walk(f.left, bound)
            walk(f.right, bound)

    walk(f, bound)
    return list(seen)


# -- lexer ------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<block>/\*.*?\*/)
  | (?P<sq>'(?:[^'\\]|\\.)*')
  | (?P<dq>"(?:[^"\\]|\\.)*")
  | (?P<op><~>|<=>|=>|<=|~\||~&|!=|[()\[\],.:!?~&|=])
  | (?P<dollar>\$\$?[a-z][A-Za-z0-9_]*)
  | (?P<upper>[A-Z][A-Za-z0-9_]*)
  | (?P<lower>[a-z][A-Za-z0-9_]*)
  | (?P<num>[+-]?[0-9]+(?:\.[0-9]+)?)
    """,
    re.VERBOSE | re.DOTALL,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str, source: str = "<input>") -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise TPTPSyntaxError("unexpected character", line, pos - line_start + 1, text[pos], source)
        kind = m.lastgroup
        s = m.group()
        if kind not in ("ws", "comment", "block"):
            tokens.append(Token(kind, s, line, pos - line_start + 1))
        nl = s.count("\n")
        if nl:
            line += nl
            line_start = pos + s.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "<eof>", line, pos - line_start + 1))
    return tokens


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s[1:-1])


# -- parser -----------------------------------------------------------------

_BINARY_LOW = ("<=>", "<~>", "=>", "<=")


class _Parser:
    def __init__(self, text: str, source: str):
        self.source = source
        self.toks = tokenize(text, source)
        self.i = 0
        self.scope: list[str] = []
        self.renames: list[tuple[str, str]] = []
        self.var_names: set[str] = set()

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise TPTPSyntaxError(message, tok.line, tok.col, tok.text, self.source)

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind == "op" and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.advance()

    # top level
    def statements(self) -> Iterator[tuple]:
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "lower":
                self.error("expected fof, cnf or include")
            if t.text == "include":
                yield ("include", *self.include())
            elif t.text in ("fof", "cnf"):
                yield ("formula", self.annotated())
            else:
                self.error(f"unsupported statement {t.text!r}")

    def include(self):
        self.advance()
        self.expect("(")
        t = self.advance()
        if t.kind != "sq":
            self.error("expected quoted file name", t)
        names = None
        if self.at(","):
            self.advance()
            self.expect("[")
            names = []
            while not self.at("]"):
                names.append(self.name())
                if self.at(","):
                    self.advance()
            self.advance()
        self.expect(")")
        self.expect(".")
        return _unquote(t.text), names, t

    def name(self) -> str:
        t = self.advance()
        if t.kind in ("lower", "num", "upper"):
            return t.text
        if t.kind == "sq":
            return _unquote(t.text)
        self.error("expected a name", t)

    def annotated(self) -> AnnotatedFormula:
        language = self.advance().text
        self.expect("(")
        name = self.name()
        self.expect(",")
        role_tok = self.advance()
        if role_tok.kind != "lower" or role_tok.text not in ROLES:
            self.error("unsupported role", role_tok)
        self.expect(",")
        self.scope, self.renames, self.var_names = [], [], set()
        body = self.formula()
        if language == "cnf" or free_vars(body):
            fv = free_vars(body)
            if fv:
                body = Forall(tuple(fv), body)
        if self.at(","):
            self.skip_annotations()
        self.expect(")")
        self.expect(".")
        return AnnotatedFormula(name, role_tok.text, body, language)

    def skip_annotations(self):
        depth = 0
        while True:
            t = self.tok
            if t.kind == "eof":
                self.error("unterminated annotation")
            if t.kind == "op" and t.text in "([":
                depth += 1
            elif t.kind == "op" and t.text in ")]":
                if depth == 0:
                    return
                depth -= 1
            self.advance()

    # formulas, lowest precedence first; chains associate to the right
    def formula(self) -> Formula:
        left = self.disjunction()
        t = self.tok
        if t.kind == "op" and t.text in _BINARY_LOW:
            self.advance()
            right = self.formula()
            if t.text == "<=>":
                return Iff(left, right)
            if t.text == "<~>":
                return Not(Iff(left, right))
            if t.text == "=>":
                return Implies(left, right)
            return Implies(right, left)
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        if self.at("|"):
            self.advance()
            return Or(left, self.disjunction())
        if self.at("~|"):
            self.advance()
            return Not(Or(left, self.disjunction()))
        return left

    def conjunction(self) -> Formula:
        left = self.unitary()
        if self.at("&"):
            self.advance()
            return And(left, self.conjunction())
        if self.at("~&"):
            self.advance()
            return Not(And(left, self.conjunction()))
        return left

    def unitary(self) -> Formula:
        t = self.tok
        if t.kind == "op":
            if t.text == "(":
                self.advance()
                f = self.formula()
                self.expect(")")
                return f
            if t.text == "~":
                self.advance()
                return Not(self.unitary())
            if t.text in ("!", "?"):
                return self.quantified()
        return self.atomic()

    def quantified(self) -> Formula:
        q = self.advance().text
        self.expect("[")
        names = []
        while True:
            t = self.advance()
            if t.kind != "upper":
                self.error("expected a variable", t)
            names.append(t.text)
            if self.at(","):
                self.advance()
                continue
            break
        self.expect("]")
        self.expect(":")
        bound = []
        for n in names:
            new = n
            if n in self.scope or n in bound:
                k = 1
                while f"{n}_{k}" in self.var_names or f"{n}_{k}" in self.scope:
                    k += 1
                new = f"{n}_{k}"
            self.var_names.add(new)
            bound.append(new)
        pushed = list(zip(names, bound))
        self.renames.extend(pushed)
        self.scope.extend(bound)
        body = self.unitary()
        del self.scope[-len(bound):]
        del self.renames[-len(pushed):]
        cls = Forall if q == "!" else Exists
        return cls(tuple(bound), body)

    def atomic(self) -> Formula:
        t = self.tok
        left = self.term()
        if self.at("="):
            self.advance()
            return eq(left, self.term())
        if self.at("!="):
            self.advance()
            return Not(eq(left, self.term()))
        if isinstance(left, str):
            self.error("variable used as a formula", t)
        return Atom(left[0], left[1:])

    def lookup_var(self, name: str) -> str:
        for orig, new in reversed(self.renames):
            if orig == name:
                return new
        self.var_names.add(name)
        return name

    def term(self) -> FTerm:
        t = self.advance()
        if t.kind == "upper":
            return self.lookup_var(t.text)
        if t.kind in ("lower", "sq", "dollar", "num", "dq"):
            if t.kind == "sq":
                head = _unquote(t.text)
            else:
                head = t.text
            head = intern_symbol(head)
            if self.at("("):
                self.advance()
                args = [self.term()]
                while self.at(","):
                    self.advance()
                    args.append(self.term())
                self.expect(")")
                return (head, *args)
            return (head,)
        self.error("expected a term", t)


IncludeResolver = Callable[[str], str]


def parse_problem(
    text: str,
    include_resolver: Optional[IncludeResolver] = None,
    source: str = "<input>",
    _stack: tuple = (),
) -> list[AnnotatedFormula]:
    """Parse a TPTP problem; includes are expanded depth-first in place."""
    out: list[AnnotatedFormula] = []
    for stmt in _Parser(text, source).statements():
        if stmt[0] == "formula":
            out.append(stmt[1])
            continue
        _, path, names, tok = stmt
        if path in _stack or path == source:
            raise IncludeError(path, "include cycle")
        if include_resolver is None:
            raise IncludeError(path, "no include resolver")
        try:
            sub = include_resolver(path)
        except (OSError, KeyError) as exc:
            raise IncludeError(path, str(exc) or type(exc).__name__) from None
        if sub is None:
            raise IncludeError(path, "not found")
        included = parse_problem(sub, include_resolver, source=path, _stack=_stack + (source,))
        if names is not None:
            wanted = set(names)
            included = [f for f in included if f.name in wanted]
        out.extend(included)
    return out


def file_resolver(problem_path: str | os.PathLike | None = None,
                  include_dir: str | os.PathLike | None = None) -> IncludeResolver:
    """Resolve include paths against ``include_dir``, then ``$TPTP``, then the problem's directory."""
    roots: list[Path] = []
    if include_dir:
        roots.append(Path(include_dir))
    if os.environ.get("TPTP"):
        roots.append(Path(os.environ["TPTP"]))
    if problem_path is not None:
        roots.append(Path(problem_path).resolve().parent)

    def resolve(name: str) -> str:
        for root in roots:
            p = root / name
            if p.is_file():
                return p.read_text(encoding="utf-8")
        raise FileNotFoundError(f"not found under {[str(r) for r in roots]}")

    return resolve


def parse_file(path: str | os.PathLike, include_dir: str | os.PathLike | None = None) -> list[AnnotatedFormula]:
    text = Path(path).read_text(encoding="utf-8")
    return parse_problem(text, file_resolver(path, include_dir), source=str(path))


def parse_formula(text: str) -> Formula:
    """Parse a bare FOF formula (no annotation wrapper)."""
    p = _Parser(text, "<formula>")
    f = p.formula()
    if p.tok.kind != "eof":
        p.error("trailing input")
    return f


# -- printer ----------------------------------------------------------------

def print_term(t: FTerm) -> str:
    if isinstance(t, str):
        return t
    head = t[0] if t[0].startswith('"') else format_symbol(t[0])
    if len(t) == 1:
        return head
    return head + "(" + ",".join(print_term(a) for a in t[1:]) + ")"


_BINOP = {And: "&", Or: "|", Implies: "=>", Iff: "<=>"}


def print_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        if f.pred == "=" and len(f.args) == 2:
            return f"{print_term(f.args[0])} = {print_term(f.args[1])}"
        return print_term((f.pred, *f.args))
    if isinstance(f, Not):
        a = f.arg
        if isinstance(a, Atom) and a.pred == "=" and len(a.args) == 2:
            return f"{print_term(a.args[0])} != {print_term(a.args[1])}"
        return "~" + print_formula(a)
    if isinstance(f, (Forall, Exists)):
        q = "!" if isinstance(f, Forall) else "?"
        return f"{q}[{','.join(f.vars)}]: {print_formula(f.body)}"
    return f"({print_formula(f.left)} {_BINOP[type(f)]} {print_formula(f.right)})"


def print_annotated(af: AnnotatedFormula) -> str:
    return f"{af.language}({format_symbol(af.name)}, {af.role}, {print_formula(af.formula)})."
