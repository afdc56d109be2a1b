"""``j3`` command line calculator."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .. import core, equations, transcend
from ..core import J3
from ..errors import J3Error
from .evaluate import Evaluator, TypeMismatch
from .parser import ParseError, parse
from .render import DEFAULT_PRECISION, error_json, fmt_value, to_json

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


def _common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="print results as JSON")
    p.add_argument("--oracle", action="store_true", help="cross-check products and inverses with the matrix representation")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="N", help="significant digits shown (default %(default)s)")
    p.add_argument("--tol", type=float, default=core.DEFAULT_TOL, metavar="X", help="classification tolerance (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="j3", description="Calculator for commutative 3D hypercomplex J3-numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("repl", help="interactive session")
    _common(p)

    p = sub.add_parser("classify", help="zero, invertible or zero divisor (L or M)")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("solve-linear", help="solve s * x = t")
    p.add_argument("--s", required=True, metavar="EXPR")
    p.add_argument("--t", required=True, metavar="EXPR")
    _common(p)

    p = sub.add_parser("solve-quadratic", help="solve x^2 + p x + q = 0, or a x^2 + b x + c = 0 with --a")
    p.add_argument("--a", metavar="EXPR")
    p.add_argument("--p", "--b", dest="p", required=True, metavar="EXPR")
    p.add_argument("--q", "--c", dest="q", required=True, metavar="EXPR")
    _common(p)

    p = sub.add_parser("sqrt", help="all square roots of a real number")
    p.add_argument("real", type=float)
    _common(p)

    p = sub.add_parser("decompose", help="polar factorisation and cylindrical coordinates")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("exp", help="exponential")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("log", help="logarithm (principal branch unless --branch)")
    p.add_argument("expr")
    p.add_argument("--branch", type=int, default=0, metavar="K")
    _common(p)
    return parser


class Session:
    """One command invocation: evaluates inputs and prints results."""

    def __init__(self, args: argparse.Namespace, out: TextIO):
        self.args = args
        self.out = out
        self.evaluator = Evaluator(tol=args.tol, oracle=args.oracle)
        self.delta = 0.0

    def value(self, text: str):
        res = self.evaluator.run(parse(text))
        if res.oracle_delta is not None:
            self.delta = max(self.delta, res.oracle_delta)
        return res.value

    def j3(self, text: str) -> J3:
        x = self.value(text)
        if isinstance(x, float):
            return J3(x, 0.0, 0.0)
        if not isinstance(x, J3):
            raise TypeMismatch(f"expected a J3-number, got {type(x).__name__}")
        return x

    def emit(self, value):
        a = self.args
        if a.json:
            obj = to_json(value)
            if a.oracle:
                obj["oracle_delta"] = self.delta
            print(json.dumps(obj), file=self.out)
        else:
            print(fmt_value(value, a.precision), file=self.out)
            if a.oracle:
                print(f"oracle_delta = {self.delta:.3g}", file=self.out)

    def error(self, err: Exception):
        if self.args.json:
            print(json.dumps(error_json(err)), file=self.out)
        else:
            print(f"error: {err}", file=self.out)


def _dispatch(s: Session) -> None:
    a = s.args
    cmd = a.command
    if cmd == "eval":
        s.emit(s.value(a.expr))
    elif cmd == "classify":
        s.emit(core.classify(s.j3(a.expr), a.tol))
    elif cmd == "solve-linear":
        s.emit(equations.solve_linear(s.j3(a.s), s.j3(a.t), a.tol))
    elif cmd == "solve-quadratic":
        p, q = s.j3(a.p), s.j3(a.q)
        if a.a is None:
            s.emit(equations.solve_monic_quadratic(p, q, a.tol))
        else:
            s.emit(equations.solve_quadratic(s.j3(a.a), p, q, a.tol))
    elif cmd == "sqrt":
        s.emit(equations.sqrt_real(a.real))
    elif cmd == "decompose":
        s.emit(transcend.polar_decompose(s.j3(a.expr)))
    elif cmd == "exp":
        s.emit(transcend.exp(s.j3(a.expr)))
    elif cmd == "log":
        s.emit(transcend.log_branch(s.j3(a.expr), a.branch, a.tol))
    else:  # pragma: no cover - argparse restricts the choices
        raise AssertionError(cmd)


def repl(s: Session, inp: TextIO) -> int:
    """Read-eval-print loop.  ``let name = expr`` binds a name and ``_``
    holds the previous result."""
    interactive = inp.isatty()
    env = s.evaluator.env
    while True:
        if interactive:
            print("j3> ", end="", file=s.out, flush=True)
        line = inp.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("quit", "exit"):
            break
        name = None
        if line.startswith("let "):
            name, eq, rest = line[4:].partition("=")
            name = name.strip()
            if not eq or not name.isidentifier():
                s.error(ParseError("expected 'let name = expr'", 1, line))
                continue
            line = rest
        s.delta = 0.0
        try:
            value = s.value(line)
        except J3Error as err:
            s.error(err)
            continue
        env["_"] = value
        if name:
            env[name] = value
        s.emit(value)
    return EXIT_OK


def run_command(argv: Sequence[str], out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    s = Session(args, out)
    if args.command == "repl":
        return repl(s, sys.stdin if inp is None else inp)
    try:
        _dispatch(s)
    except ParseError as err:
        s.error(err)
        return EXIT_USAGE
    except J3Error as err:
        s.error(err)
        return EXIT_MATH
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
