"""Tokenizer and recursive descent parser.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | atom ("^" factor)?
    atom   := number suffix? | ident | ident "(" expr ("," expr)* ")" | "(" expr ")"
    suffix := "j" | "jj"

A sum made only of plain number literals, at least one of them carrying
a ``j`` or ``jj`` suffix, folds into a single :class:`J3Lit`, so
``1 + 2j + 3jj`` parses to ``J3Lit(1, 2, 3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import J3Error
from .ast import AbgLit, Binary, Call, Expr, J3Lit, RealLit, Unary, Var

# name -> (min args, max args)
FUNCTIONS = {
    "abg": (3, 3),
    "alt": (1, 1),
    "classify": (1, 1),
    "conj": (1, 1),
    "det": (1, 1),
    "dir": (1, 1),
    "exp": (1, 1),
    "inv": (1, 1),
    "log": (1, 2),
    "mod": (1, 1),
    "phi": (1, 1),
    "sqrt": (1, 1),
    "tocyl": (1, 1),
}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?P<suffix>jj|j)?(?![A-Za-z0-9_])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(),=]|⊛)
    """,
    re.VERBOSE,
)


class ParseError(J3Error):
    code = "parse_error"

    def __init__(self, message: str, column: int, token: str, expected=()):
        self.column = column
        self.token = token
        self.expected = tuple(expected)
        text = f"column {column}: {message}"
        if expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "eof"
    text: str
    column: int
    value: float = 0.0
    suffix: str = ""


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1, text[pos])
        col = pos + 1
        pos = m.end()
        if m.group("ws"):
            continue
        if m.group("num"):
            tokens.append(Token("num", m.group(0), col, float(m.group("num")), m.group("suffix") or ""))
        elif m.group("ident"):
            tokens.append(Token("ident", m.group(0), col))
        else:
            op = "*" if m.group("op") == "⊛" else m.group("op")
            tokens.append(Token("op", op, col))
    tokens.append(Token("eof", "", len(text) + 1))
    return tokens


def _lit_of(tok: Token) -> Expr:
    if tok.suffix == "j":
        return J3Lit(0.0, tok.value, 0.0)
    if tok.suffix == "jj":
        return J3Lit(0.0, 0.0, tok.value)
    return RealLit(tok.value)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected) -> ParseError:
        t = self.tok
        shown = t.text if t.kind != "eof" else "end of input"
        return ParseError(f"unexpected {shown!r}", t.column, t.text, expected)

    def expect(self, op: str) -> Token:
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        raise self.fail([repr(op)])

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            raise self.fail(["operator", "end of input"])
        return e

    # Each level returns (node, literal) where ``literal`` is the signed
    # number token when the node is a bare, optionally negated, number.

    def expr(self) -> Expr:
        first = self.term()
        terms = [("+", first)]
        while self.at_op("+", "-"):
            op = self.advance().text
            terms.append((op, self.term()))
        lits = [lit for _, (_, lit) in terms]
        if all(lit is not None for lit in lits) and any(lit[1].suffix for lit in lits):
            comps = [0.0, 0.0, 0.0]
            for (op, _), (sign, tok) in zip(terms, lits):
                k = {"": 0, "j": 1, "jj": 2}[tok.suffix]
                val = tok.value if sign > 0 else -tok.value
                comps[k] += val if op == "+" else -val
            return J3Lit(*comps)
        node = first[0]
        for op, (rhs, _) in terms[1:]:
            node = Binary(op, node, rhs)
        return node

    def term(self):
        node, lit = self.factor()
        while self.at_op("*", "/"):
            op = self.advance().text
            rhs, _ = self.factor()
            node, lit = Binary(op, node, rhs), None
        return node, lit

    def factor(self):
        if self.at_op("-"):
            self.advance()
            operand, lit = self.factor()
            if lit is not None and lit[0] > 0:
                return Unary("-", operand), (-1, lit[1])
            return Unary("-", operand), None
        node, lit = self.atom()
        if self.at_op("^"):
            self.advance()
            exponent, _ = self.factor()
            return Binary("^", node, exponent), None
        return node, lit

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return _lit_of(t), (1, t)
        if t.kind == "ident":
            self.advance()
            if not self.at_op("("):
                if t.text in FUNCTIONS:
                    raise self.fail(["'('"])
                return Var(t.text), None
            if t.text not in FUNCTIONS:
                raise ParseError(f"unknown function {t.text!r}", t.column, t.text, sorted(FUNCTIONS))
            self.advance()
            args = [self.expr()]
            while self.at_op(","):
                self.advance()
                args.append(self.expr())
            self.expect(")")
            lo, hi = FUNCTIONS[t.text]
            if not lo <= len(args) <= hi:
                want = str(lo) if lo == hi else f"{lo}-{hi}"
                raise ParseError(
                    f"{t.text}() takes {want} argument(s), got {len(args)}", t.column, t.text
                )
            if t.text == "abg":
                nums = [_as_number(a) for a in args]
                if all(n is not None for n in nums):
                    return AbgLit(*nums), None
            return Call(t.text, tuple(args)), None
        if self.at_op("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e, None
        raise self.fail(["number", "identifier", "'('", "'-'"])


def _as_number(e: Expr):
    if isinstance(e, RealLit):
        return e.value
    if isinstance(e, Unary) and e.op == "-" and isinstance(e.operand, RealLit):
        return -e.operand.value
    return None


def parse(text: str) -> Expr:
    """Parse calculator input into an expression tree."""
    return _Parser(text).parse()
