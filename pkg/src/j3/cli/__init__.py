"""Expression language, evaluator and command line front end."""

from .ast import AbgLit, Binary, Call, Expr, J3Lit, RealLit, Unary, Var, to_source
from .evaluate import DivisionByZeroDivisor, EvalError, EvalResult, Evaluator, UnboundVariable, evaluate
from .main import main, run_command
from .parser import ParseError, parse

__all__ = [
    "AbgLit",
    "Binary",
    "Call",
    "DivisionByZeroDivisor",
    "EvalError",
    "EvalResult",
    "evaluate",
    "Evaluator",
    "Expr",
    "J3Lit",
    "main",
    "parse",
    "ParseError",
    "RealLit",
    "run_command",
    "to_source",
    "Unary",
    "UnboundVariable",
    "Var",
]
