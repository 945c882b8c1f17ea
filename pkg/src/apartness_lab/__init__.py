"""Verification workbench for apartness terms over finite Heyting algebras."""

from apartness_lab.formula import (
    Atom,
    BOT,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    TOP,
    Top,
    And,
    Or,
    free_atoms,
    parse,
    pretty,
    substitute,
)

__all__ = [
    "Atom",
    "BOT",
    "Bottom",
    "Formula",
    "Iff",
    "Implies",
    "Not",
    "TOP",
    "Top",
    "And",
    "Or",
    "free_atoms",
    "parse",
    "pretty",
    "substitute",
]
