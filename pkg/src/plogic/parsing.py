"""Concrete formula syntax: tokenizer, recursive-descent parser, formatter.

Grammar (loosest to tightest): ``->`` right-associative implication,
``|`` disjunction, ``&`` conjunction, ``!`` negation, parentheses, and
atoms matching ``[A-Za-z_][A-Za-z0-9_]*``.  ``|`` and ``->`` expand to
the kernel connectives at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import FormulaSyntaxError
from .formulas import And, Atom, AtomRef, Implies, Not, Or, Sentence, as_implication

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<arrow>->)"
    r"|(?P<bang>!)"
    r"|(?P<amp>&)"
    r"|(?P<pipe>\|)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
)


@dataclass
class _Token:
    kind: str
    text: str
    column: int  # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos + 1))
        pos = m.end()
    tokens.append(_Token("eof", "", len(text) + 1))
    return tokens


@dataclass
class ParsedFormula:
    """Parse result: source text, kernel tree, and the name-to-atom map."""

    source: str
    ast: Sentence
    atom_table: dict[str, Atom] = field(default_factory=dict)


class _Parser:
    def __init__(self, tokens: list[_Token], table: dict[str, Atom]):
        self.tokens = tokens
        self.pos = 0
        self.table = table

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.current
        if tok.kind != kind:
            raise FormulaSyntaxError(f"expected {what}", tok.column)
        return self.advance()

    def parse(self) -> Sentence:
        ast = self.implication()
        tok = self.current
        if tok.kind != "eof":
            raise FormulaSyntaxError(f"unexpected {tok.text!r}", tok.column)
        return ast

    def implication(self) -> Sentence:
        left = self.disjunction()
        if self.current.kind == "arrow":
            self.advance()
            return Implies(left, self.implication())  # right-associative
        return left

    def disjunction(self) -> Sentence:
        node = self.conjunction()
        while self.current.kind == "pipe":
            self.advance()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Sentence:
        node = self.unary()
        while self.current.kind == "amp":
            self.advance()
            node = And(node, self.unary())
        return node

    def unary(self) -> Sentence:
        if self.current.kind == "bang":
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Sentence:
        tok = self.current
        if tok.kind == "name":
            self.advance()
            atom = self.table.get(tok.text)
            if atom is None:
                atom = Atom(len(self.table), tok.text)
                self.table[tok.text] = atom
            return AtomRef(atom)
        if tok.kind == "lparen":
            self.advance()
            node = self.implication()
            self.expect("rparen", "')'")
            return node
        raise FormulaSyntaxError("expected an atom, '!', or '('", tok.column)


def parse_formula(text: str, atom_table: dict[str, Atom] | None = None) -> ParsedFormula:
    """Parse formula text; atoms get dense ids in first-occurrence order.

    Passing an existing ``atom_table`` lets several formulas share one
    basic set (the table is extended in place).
    """
    table = atom_table if atom_table is not None else {}
    ast = _Parser(_tokenize(text), table).parse()
    return ParsedFormula(text, ast, table)


# Formatter precedence levels, loosest first.
_PREC_IMPL = 0
_PREC_OR = 1
_PREC_AND = 2
_PREC_UNARY = 3


def _sugar(s: Sentence):
    """Recognize the display sugar for a kernel tree.

    not(not a and not b) renders as a | b and not(a and not b) as a -> b.
    When both readings apply (negated antecedent) the two denote the same
    tree, so round-tripping is unaffected either way; the implication
    reading is kept when the antecedent is itself implication-shaped,
    which is how proof lines read naturally.
    """
    if type(s) is Not and type(s.child) is And:
        body = s.child
        if type(body.right) is Not:
            if type(body.left) is Not and as_implication(body.left) is None:
                return "or", body.left.child, body.right.child
            return "implies", body.left, body.right.child
    return None


def format_sentence(s: Sentence) -> str:
    """Render a kernel tree in the concrete grammar; parses back to the
    structurally identical tree."""
    return _format(s, _PREC_IMPL)


def _format(s: Sentence, context: int) -> str:
    sugar = _sugar(s)
    if sugar is not None:
        op, a, b = sugar
        if op == "or":
            text = f"{_format(a, _PREC_OR)} | {_format(b, _PREC_AND)}"
            return f"({text})" if context > _PREC_OR else text
        text = f"{_format(a, _PREC_OR)} -> {_format(b, _PREC_IMPL)}"
        return f"({text})" if context > _PREC_IMPL else text
    t = type(s)
    if t is AtomRef:
        return s.atom.name
    if t is Not:
        return f"!{_format(s.child, _PREC_UNARY + 1)}"
    text = f"{_format(s.left, _PREC_AND)} & {_format(s.right, _PREC_UNARY)}"
    return f"({text})" if context > _PREC_AND else text
