"""Propositional formulas over two negations.

Surface syntax (ASCII): `top bot & | -> ! ~ <->`, parenthesised subterms,
atoms matching ``[a-z][a-zA-Z0-9_]*``.  `!` is the intuitionistic negation,
`~` the minimal one; both bind tighter than `&`, and consecutive unaries
need no parentheses (`!!~top`).  `a <-> b` is sugar for
`(a -> b) & (b -> a)` and never appears in the AST.

Grammar::

    formula := impl ("<->" formula)?
    impl    := disj ("->" impl)?
    disj    := conj ("|" conj)*
    conj    := unary ("&" unary)*
    unary   := ("!" | "~") unary | atom
    atom    := "top" | "bot" | ident | "(" formula ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormulaSyntaxError

__all__ = [
    "Formula", "Top", "Bot", "Atom", "And", "Or", "Impl", "Neg", "Tilde",
    "TOP", "BOT", "parse", "render", "atoms", "match_scheme", "substitute",
    "metavariables", "contains_impl", "contains_neg", "contains_bot",
]

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
_KEYWORDS = frozenset({"top", "bot"})


class Formula:
    """Base class; all nodes are frozen dataclasses with structural equality."""

    __slots__ = ()


@dataclass(frozen=True)
class Top(Formula):
    __slots__ = ()


@dataclass(frozen=True)
class Bot(Formula):
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_RE.match(self.name) or self.name in _KEYWORDS:
            raise FormulaSyntaxError(0, frozenset({"identifier"}),
                                     f"reserved or malformed atom name {self.name!r}")


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Impl(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Neg(Formula):
    child: Formula


@dataclass(frozen=True)
class Tilde(Formula):
    child: Formula


TOP = Top()
BOT = Bot()

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<iff><->)|(?P<arrow>->)|(?P<amp>&)|(?P<bar>\|)|(?P<bang>!)"
    r"|(?P<tilde>~)|(?P<lp>\()|(?P<rp>\))|(?P<word>[a-zA-Z][a-zA-Z0-9_]*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == m.start():
            # skip over trailing whitespace before declaring failure
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise FormulaSyntaxError(bad, frozenset({"token"}),
                                     f"unexpected character {text[bad]!r}")
        kind = m.lastgroup
        assert kind is not None
        value = m.group(kind)
        start = m.end() - len(value)
        if kind == "word":
            if value in _KEYWORDS:
                kind = value
            elif not _ATOM_RE.match(value):
                raise FormulaSyntaxError(start, frozenset({"identifier"}),
                                         f"bad identifier {value!r}")
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


_START_EXPECT = frozenset({"top", "bot", "identifier", "(", "!", "~"})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: frozenset[str]):
        kind, value, offset = self.peek()
        raise FormulaSyntaxError(offset, expected,
                                 f"found {value!r}" if value else "found end of input")

    def formula(self) -> Formula:
        left = self.impl()
        if self.peek()[0] == "iff":
            self.take()
            right = self.formula()
            return And(Impl(left, right), Impl(right, left))
        return left

    def impl(self) -> Formula:
        left = self.disj()
        if self.peek()[0] == "arrow":
            self.take()
            return Impl(left, self.impl())
        return left

    def disj(self) -> Formula:
        node = self.conj()
        while self.peek()[0] == "bar":
            self.take()
            node = Or(node, self.conj())
        return node

    def conj(self) -> Formula:
        node = self.unary()
        while self.peek()[0] == "amp":
            self.take()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        kind, _, _ = self.peek()
        if kind == "bang":
            self.take()
            return Neg(self.unary())
        if kind == "tilde":
            self.take()
            return Tilde(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "top":
            self.take()
            return TOP
        if kind == "bot":
            self.take()
            return BOT
        if kind == "word":
            self.take()
            return Atom(value)
        if kind == "lp":
            self.take()
            node = self.formula()
            if self.peek()[0] != "rp":
                self.fail(frozenset({")"}))
            self.take()
            return node
        self.fail(_START_EXPECT)
        raise AssertionError("unreachable")


def parse(text: str) -> Formula:
    """Parse `text` into a Formula; raises FormulaSyntaxError with the offset on failure."""
    p = _Parser(text)
    node = p.formula()
    if p.peek()[0] != "eof":
        p.fail(frozenset({"end of input", "->", "<->", "&", "|"}))
    return node


# Precedence levels for minimal-parenthesis rendering.
_PREC_IMPL, _PREC_OR, _PREC_AND, _PREC_UNARY, _PREC_ATOM = 0, 1, 2, 3, 4


def _prec(f: Formula) -> int:
    match f:
        case Impl():
            return _PREC_IMPL
        case Or():
            return _PREC_OR
        case And():
            return _PREC_AND
        case Neg() | Tilde():
            return _PREC_UNARY
        case _:
            return _PREC_ATOM


def _render(f: Formula, need: int) -> str:
    match f:
        case Top():
            s = "top"
        case Bot():
            s = "bot"
        case Atom(name):
            s = name
        case Impl(l, r):
            s = f"{_render(l, _PREC_OR)} -> {_render(r, _PREC_IMPL)}"
        case Or(l, r):
            s = f"{_render(l, _PREC_OR)} | {_render(r, _PREC_AND)}"
        case And(l, r):
            s = f"{_render(l, _PREC_AND)} & {_render(r, _PREC_UNARY)}"
        case Neg(c):
            s = f"!{_render(c, _PREC_UNARY)}"
        case Tilde(c):
            s = f"~{_render(c, _PREC_UNARY)}"
        case _:
            raise TypeError(f"not a formula: {f!r}")
    if _prec(f) < need:
        return f"({s})"
    return s


def render(f: Formula) -> str:
    """Minimal-parenthesis text; parse(render(f)) is structurally equal to f."""
    return _render(f, _PREC_IMPL)


def atoms(f: Formula) -> list[str]:
    """Atom names in first-occurrence order, duplicates removed."""
    out: list[str] = []
    seen: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        match node:
            case Atom(name):
                if name not in seen:
                    seen.add(name)
                    out.append(name)
            case And(l, r) | Or(l, r) | Impl(l, r):
                stack.append(r)
                stack.append(l)
            case Neg(c) | Tilde(c):
                stack.append(c)
    return out


# A Scheme is a Formula whose atoms are read as metavariables.
metavariables = atoms


def match_into(scheme: Formula, target: Formula, subst: dict[str, Formula]) -> bool:
    """Extend `subst` so that subst(scheme) == target; one-way matching."""
    match scheme:
        case Atom(name):
            bound = subst.get(name)
            if bound is None:
                subst[name] = target
                return True
            return bound == target
        case Top():
            return isinstance(target, Top)
        case Bot():
            return isinstance(target, Bot)
        case And(l, r):
            return (isinstance(target, And)
                    and match_into(l, target.left, subst)
                    and match_into(r, target.right, subst))
        case Or(l, r):
            return (isinstance(target, Or)
                    and match_into(l, target.left, subst)
                    and match_into(r, target.right, subst))
        case Impl(l, r):
            return (isinstance(target, Impl)
                    and match_into(l, target.left, subst)
                    and match_into(r, target.right, subst))
        case Neg(c):
            return isinstance(target, Neg) and match_into(c, target.child, subst)
        case Tilde(c):
            return isinstance(target, Tilde) and match_into(c, target.child, subst)
    raise TypeError(f"not a formula: {scheme!r}")


def match_scheme(scheme: Formula, target: Formula) -> dict[str, Formula] | None:
    """The unique substitution sending `scheme` to `target`, or None."""
    subst: dict[str, Formula] = {}
    if match_into(scheme, target, subst):
        return subst
    return None


def substitute(scheme: Formula, subst: dict[str, Formula]) -> Formula:
    match scheme:
        case Atom(name):
            return subst.get(name, scheme)
        case Top() | Bot():
            return scheme
        case And(l, r):
            return And(substitute(l, subst), substitute(r, subst))
        case Or(l, r):
            return Or(substitute(l, subst), substitute(r, subst))
        case Impl(l, r):
            return Impl(substitute(l, subst), substitute(r, subst))
        case Neg(c):
            return Neg(substitute(c, subst))
        case Tilde(c):
            return Tilde(substitute(c, subst))
    raise TypeError(f"not a formula: {scheme!r}")


def contains_impl(f: Formula) -> bool:
    match f:
        case Impl():
            return True
        case And(l, r) | Or(l, r):
            return contains_impl(l) or contains_impl(r)
        case Neg(c) | Tilde(c):
            return contains_impl(c)
        case _:
            return False


def contains_neg(f: Formula) -> bool:
    match f:
        case Neg():
            return True
        case And(l, r) | Or(l, r) | Impl(l, r):
            return contains_neg(l) or contains_neg(r)
        case Tilde(c):
            return contains_neg(c)
        case _:
            return False


def contains_bot(f: Formula) -> bool:
    match f:
        case Bot():
            return True
        case And(l, r) | Or(l, r) | Impl(l, r):
            return contains_bot(l) or contains_bot(r)
        case Neg(c) | Tilde(c):
            return contains_bot(c)
        case _:
            return False
