"""First-order terms, literals and the binding trail.

Representation is deliberately bare so the search loop stays cheap:

* a variable is a non-negative ``int``;
* a compound term is a tuple ``(symbol, arg1, ..., argN)`` whose head is an
  interned ``str``; constants are 1-tuples such as ``("a",)``;
* a literal is a :class:`Literal` holding a polarity flag and an atom, where
  the atom has the same shape as a compound term (predicate at index 0).

Bindings live in a :class:`Trail`. Dereferencing is shallow; full
application is only done when something has to be printed or compared
outside the search.
"""

from __future__ import annotations

import sys
from typing import Iterable, Iterator, NamedTuple, Union

Term = Union[int, tuple]

MARKER = "#"


def intern_symbol(name: str) -> str:
    return sys.intern(name)


def const(name: str) -> tuple:
    return (intern_symbol(name),)


def fn(name: str, *args: Term) -> tuple:
    return (intern_symbol(name), *args)


class Literal(NamedTuple):
    neg: bool
    atom: tuple

    @property
    def predicate(self) -> str:
        return self.atom[0]

    @property
    def args(self) -> tuple:
        return self.atom[1:]

    def complement(self) -> "Literal":
        return Literal(not self.neg, self.atom)

    def __str__(self) -> str:
        return format_literal(self)


def lit(pred: str, *args: Term, neg: bool = False) -> Literal:
    return Literal(neg, (intern_symbol(pred), *args))


MARKER_LIT = Literal(False, (MARKER,))
START_GOAL = Literal(True, (MARKER,))


class Trail:
    """Undoable variable bindings.

    ``mark()`` returns a position; ``undo(pos)`` removes every binding made
    after it.
    """

    __slots__ = ("bindings", "order")

    def __init__(self, bindings: dict[int, Term] | None = None):
        self.bindings: dict[int, Term] = {}
        self.order: list[int] = []
        for v, t in (bindings or {}).items():
            self.bind(v, t)

    def bind(self, var: int, term: Term) -> None:
        assert var not in self.bindings, f"V{var} already bound"
        self.bindings[var] = term
        self.order.append(var)

    def mark(self) -> int:
        return len(self.order)

    def undo(self, mark: int) -> None:
        order, bindings = self.order, self.bindings
        while len(order) > mark:
            del bindings[order.pop()]

    def snapshot(self) -> dict[int, Term]:
        return dict(self.bindings)

    def __len__(self) -> int:
        return len(self.order)

    def __repr__(self) -> str:
        inner = ", ".join(f"V{v}->{format_term(t)}" for v, t in self.bindings.items())
        return f"Trail({inner})"


def deref(trail: Trail, t: Term) -> Term:
    bindings = trail.bindings
    while t.__class__ is int:
        b = bindings.get(t)
        if b is None:
            return t
        t = b
    return t


def occurs(trail: Trail, var: int, t: Term) -> bool:
    t = deref(trail, t)
    if t.__class__ is int:
        return t == var
    for a in t[1:]:
        if occurs(trail, var, a):
            return True
    return False


def _unify(trail: Trail, a: Term, b: Term) -> bool:
    a = deref(trail, a)
    b = deref(trail, b)
    if a.__class__ is int:
        if a == b:
            return True
        if occurs(trail, a, b):
            return False
        trail.bind(a, b)
        return True
    if b.__class__ is int:
        if occurs(trail, b, a):
            return False
        trail.bind(b, a)
        return True
    if a[0] is not b[0] and a[0] != b[0]:
        return False
    if len(a) != len(b):
        return False
    for x, y in zip(a[1:], b[1:]):
        if not _unify(trail, x, y):
            return False
    return True


def unify(trail: Trail, t1: Term, t2: Term) -> bool:
    """Most general unification with occurs check.

    On failure the trail is left exactly as it was.
    """
    mark = trail.mark()
    if _unify(trail, t1, t2):
        return True
    trail.undo(mark)
    return False


def unify_literals(trail: Trail, l1: Literal, l2: Literal) -> bool:
    if l1.neg != l2.neg:
        return False
    return unify(trail, l1.atom, l2.atom)


def substeq(trail: Trail, t1, t2) -> bool:
    """Syntactic identity after applying the trail; never binds anything."""
    if isinstance(t1, Literal):
        if not isinstance(t2, Literal) or t1.neg != t2.neg:
            return False
        t1, t2 = t1.atom, t2.atom
    return _substeq(trail.bindings, t1, t2)


def _substeq(bindings: dict, a: Term, b: Term) -> bool:
    while a.__class__ is int and a in bindings:
        a = bindings[a]
    while b.__class__ is int and b in bindings:
        b = bindings[b]
    if a.__class__ is int or b.__class__ is int:
        return a == b
    if a is b:
        return True
    if a[0] != b[0] or len(a) != len(b):
        return False
    for x, y in zip(a[1:], b[1:]):
        if not _substeq(bindings, x, y):
            return False
    return True


def apply_full(trail: Trail | dict, t):
    """Replace every bound variable by its (recursively applied) value."""
    bindings = trail.bindings if isinstance(trail, Trail) else trail
    if isinstance(t, Literal):
        return Literal(t.neg, _apply(bindings, t.atom))
    return _apply(bindings, t)


def _apply(bindings: dict, t: Term) -> Term:
    while t.__class__ is int:
        b = bindings.get(t)
        if b is None:
            return t
        t = b
    if len(t) == 1:
        return t
    return (t[0], *[_apply(bindings, a) for a in t[1:]])


def rename_term(t: Term, offset: int) -> Term:
    if t.__class__ is int:
        return t + offset
    if len(t) == 1:
        return t
    return (t[0], *[rename_term(a, offset) for a in t[1:]])


def rename_literal(l: Literal, offset: int) -> Literal:
    return Literal(l.neg, rename_term(l.atom, offset))


def rename_clause(clause: Iterable[Literal], offset: int) -> tuple[Literal, ...]:
    """Shift every variable id in ``clause`` by ``offset``."""
    return tuple(Literal(l.neg, rename_term(l.atom, offset)) for l in clause)


def term_vars(t: Term) -> Iterator[int]:
    if t.__class__ is int:
        yield t
    else:
        for a in t[1:]:
            yield from term_vars(a)


def literal_vars(l: Literal) -> Iterator[int]:
    return term_vars(l.atom)


def is_ground(t) -> bool:
    if isinstance(t, Literal):
        t = t.atom
    return next(term_vars(t), None) is None


def max_var(literals: Iterable[Literal]) -> int:
    """Largest variable id in ``literals``, or -1 when ground."""
    return max((v for l in literals for v in literal_vars(l)), default=-1)


# -- printing ---------------------------------------------------------------

_LOWER_WORD_TAIL = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def format_symbol(name: str) -> str:
    if name and (name[0].islower() or name[0] == "$") and all(c in _LOWER_WORD_TAIL for c in name[1:]) and name.isascii():
        return name
    if name.isdigit():
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def format_term(t: Term) -> str:
    if t.__class__ is int:
        return f"V{t}"
    head = format_symbol(t[0])
    if len(t) == 1:
        return head
    return head + "(" + ",".join(format_term(a) for a in t[1:]) + ")"


def format_atom(atom: tuple) -> str:
    if atom[0] == MARKER and len(atom) == 1:
        return MARKER
    if atom[0] == "=" and len(atom) == 3:
        return f"{format_term(atom[1])}={format_term(atom[2])}"
    return format_term(atom)


def format_literal(l: Literal) -> str:
    return ("-" if l.neg else "") + format_atom(l.atom)
