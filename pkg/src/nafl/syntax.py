"""Propositional formula trees, the plain-text grammar, and the printer.

Surface syntax (ASCII): ``~`` negation, ``&`` conjunction, ``|`` disjunction,
``->`` implication (right associative), ``<->`` biconditional. Precedence from
tightest to loosest: ``~``, ``&``, ``|``, ``->``, ``<->``; parentheses
override. Atom names match ``[A-Za-z_][A-Za-z0-9_]*``.

``~~A`` stays structurally distinct from ``A``: double negation is simplified
semantically, never by rewriting the tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError, UnknownTokenError


@dataclass(frozen=True, slots=True)
class Formula:
    """Base class; concrete nodes are the five subclasses below."""

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


def atoms_of(formula: Formula) -> frozenset[str]:
    """Set of atom names occurring in the formula."""
    names: set[str] = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            names.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        else:
            stack.append(node.left)   # type: ignore[attr-defined]
            stack.append(node.right)  # type: ignore[attr-defined]
    return frozenset(names)


# --------------------------------------------------------------------------
# Tokenizer
# --------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<atom>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<iff><->)"
    r"|(?P<implies>->)"
    r"|(?P<op>[~&|()])"
)


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[_Token]:
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise UnknownTokenError(
                f"unknown token {text[pos]!r}", line, pos - line_start + 1
            )
        kind = match.lastgroup or ""
        value = match.group()
        if kind == "ws":
            for i, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        elif kind == "op":
            yield _Token(value, value, line, pos - line_start + 1)
        else:
            yield _Token(kind, value, line, pos - line_start + 1)
        pos = match.end()
    yield _Token("eof", "", line, len(text) - line_start + 1)


# --------------------------------------------------------------------------
# Recursive-descent parser
# --------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str) -> _Token:
        if self.current.kind != kind:
            tok = self.current
            shown = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(f"expected {kind!r}, found {shown!r}", tok.line, tok.column)
        return self.advance()

    def parse(self) -> Formula:
        formula = self.bicond()
        if self.current.kind != "eof":
            tok = self.current
            raise ParseError(f"unexpected trailing {tok.text!r}", tok.line, tok.column)
        return formula

    def bicond(self) -> Formula:
        node = self.impl()
        while self.current.kind == "iff":
            self.advance()
            node = Iff(node, self.impl())
        return node

    def impl(self) -> Formula:
        node = self.disj()
        if self.current.kind == "implies":
            self.advance()
            node = Implies(node, self.impl())
        return node

    def disj(self) -> Formula:
        node = self.conj()
        while self.current.kind == "|":
            self.advance()
            node = Or(node, self.conj())
        return node

    def conj(self) -> Formula:
        node = self.unary()
        while self.current.kind == "&":
            self.advance()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        tok = self.current
        if tok.kind == "~":
            self.advance()
            return Not(self.unary())
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "(":
            self.advance()
            node = self.bicond()
            self.expect(")")
            return node
        shown = tok.text if tok.kind != "eof" else "end of input"
        raise ParseError(f"expected a formula, found {shown!r}", tok.line, tok.column)


def parse_formula(text: str) -> Formula:
    """Parse formula text into its unique tree.

    Raises ParseError (with line/column) on malformed input and
    UnknownTokenError on characters outside the grammar.
    """
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# Printer (minimal parentheses; parse(format_formula(f)) == f)
# --------------------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6}


def _render(node: Formula, min_prec: int) -> str:
    prec = _PREC[type(node)]
    if isinstance(node, Atom):
        text = node.name
    elif isinstance(node, Not):
        text = "~" + _render(node.operand, 5)
    elif isinstance(node, And):
        text = _render(node.left, 4) + " & " + _render(node.right, 5)
    elif isinstance(node, Or):
        text = _render(node.left, 3) + " | " + _render(node.right, 4)
    elif isinstance(node, Implies):
        # right associative: the right child may be another implication
        text = _render(node.left, 3) + " -> " + _render(node.right, 2)
    else:
        text = _render(node.left, 1) + " <-> " + _render(node.right, 2)
    if prec < min_prec:
        return "(" + text + ")"
    return text


def format_formula(formula: Formula) -> str:
    return _render(formula, 0)


# --------------------------------------------------------------------------
# Negation normal form (used by the superposed-model evaluator)
# --------------------------------------------------------------------------


def to_nnf(formula: Formula, negate: bool = False) -> Formula:
    """Push negations down to literals, expanding -> and <-> on the way."""
    if isinstance(formula, Atom):
        return Not(formula) if negate else formula
    if isinstance(formula, Not):
        return to_nnf(formula.operand, not negate)
    if isinstance(formula, And):
        if negate:
            return Or(to_nnf(formula.left, True), to_nnf(formula.right, True))
        return And(to_nnf(formula.left, False), to_nnf(formula.right, False))
    if isinstance(formula, Or):
        if negate:
            return And(to_nnf(formula.left, True), to_nnf(formula.right, True))
        return Or(to_nnf(formula.left, False), to_nnf(formula.right, False))
    if isinstance(formula, Implies):
        if negate:
            return And(to_nnf(formula.left, False), to_nnf(formula.right, True))
        return Or(to_nnf(formula.left, True), to_nnf(formula.right, False))
    assert isinstance(formula, Iff)
    left, right = formula.left, formula.right
    if negate:
        return Or(
            And(to_nnf(left, False), to_nnf(right, True)),
            And(to_nnf(left, True), to_nnf(right, False)),
        )
    return And(
        Or(to_nnf(left, True), to_nnf(right, False)),
        Or(to_nnf(left, False), to_nnf(right, True)),
    )
