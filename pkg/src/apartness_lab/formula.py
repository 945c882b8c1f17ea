"""Propositional formulas over the Heyting signature.

The AST has exactly six cases: atoms, bot, top, conjunction, disjunction
and implication.  ``~p`` abbreviates ``p -> bot`` and ``p <-> q``
abbreviates ``(p -> q) & (q -> p)``; both are desugared by the parser and
re-sugared by the printer, so they never occur as AST nodes.

Concrete syntax (ASCII): atoms ``[A-Za-z][A-Za-z0-9_]*`` except the
reserved words ``bot`` and ``top``; operators ``~ & | -> <->`` with that
precedence order (tightest first).  ``->`` associates to the right,
``&``/``|`` to the left, ``<->`` is non-associative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Formula",
    "Atom",
    "Bottom",
    "Top",
    "And",
    "Or",
    "Implies",
    "BOT",
    "TOP",
    "Not",
    "Iff",
    "FormulaError",
    "ParseError",
    "parse",
    "pretty",
    "substitute",
    "apart_instantiate",
    "free_atoms",
    "depth",
]

RESERVED_WORDS = ("bot", "top")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class FormulaError(ValueError):
    """Malformed formula construction or use."""


class ParseError(FormulaError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


class Formula:
    """Abstract base of the six AST cases."""


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _IDENT_RE.match(self.name):
            raise FormulaError(f"invalid atom name {self.name!r}")
        if self.name in RESERVED_WORDS:
            raise FormulaError(f"atom name {self.name!r} is reserved")


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


BOT = Bottom()
TOP = Top()


def Not(phi: Formula) -> Formula:
    """Negation sugar: ~p is p -> bot."""
    return Implies(phi, BOT)


def Iff(phi: Formula, psi: Formula) -> Formula:
    """Biconditional sugar: p <-> q is (p -> q) & (q -> p)."""
    return And(Implies(phi, psi), Implies(psi, phi))


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(r"(<->)|(->)|([~&|()])|([A-Za-z][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        assert m is not None
        if m.group(5):
            raise ParseError(f"unknown token {m.group(5)!r}", pos + 1)
        tokens.append((m.group(0), pos + 1))
        pos = m.end()
    tokens.append(("", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def advance(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str):
        if self.peek() != tok:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {tok!r}, found {found!r}", self.pos())
        self.advance()

    def parse(self) -> Formula:
        phi = self.iff()
        if self.peek():
            raise ParseError(f"unexpected token {self.peek()!r}", self.pos())
        return phi

    def iff(self) -> Formula:
        lhs = self.implies()
        if self.peek() == "<->":
            self.advance()
            rhs = self.implies()
            if self.peek() == "<->":
                raise ParseError("'<->' is non-associative; parenthesize the chain", self.pos())
            return Iff(lhs, rhs)
        return lhs

    def implies(self) -> Formula:
        lhs = self.disjunction()
        if self.peek() == "->":
            self.advance()
            return Implies(lhs, self.implies())
        return lhs

    def disjunction(self) -> Formula:
        phi = self.conjunction()
        while self.peek() == "|":
            self.advance()
            phi = Or(phi, self.conjunction())
        return phi

    def conjunction(self) -> Formula:
        phi = self.unary()
        while self.peek() == "&":
            self.advance()
            phi = And(phi, self.unary())
        return phi

    def unary(self) -> Formula:
        if self.peek() == "~":
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok == "(":
            self.advance()
            phi = self.iff()
            self.expect(")")
            return phi
        if tok == "bot":
            self.advance()
            return BOT
        if tok == "top":
            self.advance()
            return TOP
        if _IDENT_RE.match(tok):
            self.advance()
            return Atom(tok)
        found = tok or "end of input"
        raise ParseError(f"expected a formula, found {found!r}", self.pos())


def parse(text: str) -> Formula:
    """Parse concrete syntax into the unique AST under the declared precedences."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printing (minimal parentheses; parse(pretty(phi)) == phi)

_LEVEL_IFF = 1
_LEVEL_IMP = 2
_LEVEL_OR = 3
_LEVEL_AND = 4
_LEVEL_NOT = 5
_LEVEL_ATOM = 6


def _view(phi: Formula):
    """Display view of a node, re-sugaring ~ and <-> patterns."""
    if isinstance(phi, And):
        l, r = phi.left, phi.right
        if (
            isinstance(l, Implies)
            and isinstance(r, Implies)
            and l.left == r.right
            and l.right == r.left
        ):
            return ("iff", l.left, l.right)
        return ("and", l, r)
    if isinstance(phi, Implies):
        if phi.right == BOT:
            return ("not", phi.left)
        return ("imp", phi.left, phi.right)
    if isinstance(phi, Or):
        return ("or", phi.left, phi.right)
    if isinstance(phi, Atom):
        return ("atom", phi.name)
    if isinstance(phi, Bottom):
        return ("atom", "bot")
    if isinstance(phi, Top):
        return ("atom", "top")
    raise FormulaError(f"not a formula: {phi!r}")


def _level(phi: Formula) -> int:
    tag = _view(phi)[0]
    return {
        "iff": _LEVEL_IFF,
        "imp": _LEVEL_IMP,
        "or": _LEVEL_OR,
        "and": _LEVEL_AND,
        "not": _LEVEL_NOT,
        "atom": _LEVEL_ATOM,
    }[tag]


def _child(phi: Formula, parens_from: int) -> str:
    text = pretty(phi)
    if _level(phi) < parens_from:
        return f"({text})"
    return text


def pretty(phi: Formula) -> str:
    """Render with minimal parentheses."""
    cached = phi.__dict__.get("_pretty")
    if cached is not None:
        return cached
    view = _view(phi)
    tag = view[0]
    if tag == "atom":
        text = view[1]
    elif tag == "not":
        text = "~" + _child(view[1], _LEVEL_NOT)
    elif tag == "and":
        text = f"{_child(view[1], _LEVEL_AND)} & {_child(view[2], _LEVEL_AND + 1)}"
    elif tag == "or":
        text = f"{_child(view[1], _LEVEL_OR)} | {_child(view[2], _LEVEL_OR + 1)}"
    elif tag == "imp":
        text = f"{_child(view[1], _LEVEL_IMP + 1)} -> {_child(view[2], _LEVEL_IMP)}"
    else:
        text = f"{_child(view[1], _LEVEL_IFF + 1)} <-> {_child(view[2], _LEVEL_IFF + 1)}"
    object.__setattr__(phi, "_pretty", text)
    return text


# ---------------------------------------------------------------------------
# Structural operations

def free_atoms(phi: Formula) -> frozenset[str]:
    """The set of atom names occurring in phi."""
    if isinstance(phi, Atom):
        return frozenset((phi.name,))
    if isinstance(phi, (Bottom, Top)):
        return frozenset()
    return free_atoms(phi.left) | free_atoms(phi.right)


def depth(phi: Formula) -> int:
    """Tree depth; atoms and constants have depth 1."""
    if isinstance(phi, (Atom, Bottom, Top)):
        return 1
    return 1 + max(depth(phi.left), depth(phi.right))


def substitute(phi: Formula, name: str, repl: Formula) -> Formula:
    """Replace every occurrence of the atom ``name`` in phi by ``repl``.

    Atoms other than ``name`` and the constants are fixed; the binary
    connectives are rewritten recursively.
    """
    if isinstance(phi, Atom):
        return repl if phi.name == name else phi
    if isinstance(phi, (Bottom, Top)):
        return phi
    cls = type(phi)
    return cls(substitute(phi.left, name, repl), substitute(phi.right, name, repl))


def _fresh_name(base: str, taken: frozenset[str]) -> str:
    k = 0
    while True:
        candidate = f"{base}_{k}"
        if candidate not in taken:
            return candidate
        k += 1


def apart_instantiate(
    apart: Formula, phi: Formula, psi: Formula, first: str = "P", second: str = "Q"
) -> Formula:
    """Instantiate a two-place schema: apart[first/phi][second/psi].

    The two substitutions run sequentially.  If phi contains the atom
    ``second``, that atom is first renamed apart-side to a fresh name so the
    second substitution cannot capture occurrences introduced by phi.
    """
    extra = free_atoms(apart) - {first, second}
    if extra:
        raise FormulaError(f"schema contains unexpected atoms: {sorted(extra)}")
    if second in free_atoms(phi):
        taken = free_atoms(apart) | free_atoms(phi) | free_atoms(psi)
        fresh = _fresh_name(second, taken)
        apart = substitute(apart, second, Atom(fresh))
        second = fresh
    return substitute(substitute(apart, first, phi), second, psi)
