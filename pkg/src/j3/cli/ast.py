"""Expression tree for the calculator language."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class RealLit:
    value: float


@dataclass(frozen=True)
class J3Lit:
    u: float
    v: float
    w: float


@dataclass(frozen=True)
class AbgLit:
    a: float
    b: float
    c: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    operand: Expr


@dataclass(frozen=True)
class Binary:
    op: str
    lhs: Expr
    rhs: Expr


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Expr, ...]


Expr = Union[RealLit, J3Lit, AbgLit, Var, Unary, Binary, Call]


def _signed(x: float) -> str:
    return repr(x)


def _term(x: float, suffix: str) -> str:
    sign = "-" if math.copysign(1.0, x) < 0 else "+"
    return f" {sign} {abs(x)!r}{suffix}"


def to_source(e: Expr) -> str:
    """Render ``e`` as source text that parses back to an equal tree.

    Every compound node is parenthesised, so the output is verbose but
    independent of operator precedence.
    """
    if isinstance(e, RealLit):
        return repr(e.value)
    if isinstance(e, J3Lit):
        return f"({_signed(e.u)}{_term(e.v, 'j')}{_term(e.w, 'jj')})"
    if isinstance(e, AbgLit):
        return f"abg({_signed(e.a)}, {_signed(e.b)}, {_signed(e.c)})"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Unary):
        return f"{e.op}({to_source(e.operand)})"
    if isinstance(e, Binary):
        if e.op == "^":
            return f"(({to_source(e.lhs)}) ^ ({to_source(e.rhs)}))"
        return f"({to_source(e.lhs)} {e.op} {to_source(e.rhs)})"
    if isinstance(e, Call):
        return f"{e.func}({', '.join(to_source(a) for a in e.args)})"
    raise TypeError(f"not an expression node: {e!r}")
