"""Evaluation of calculator expressions against the library."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Union

from .. import basis, core, equations, matrixrep, transcend
from ..basis import DirectSum
from ..core import J3, J3Class
from ..equations import SolutionSet
from ..errors import J3Error
from ..transcend import CylCoords
from .ast import AbgLit, Binary, Call, Expr, J3Lit, RealLit, Unary, Var

Value = Union[float, J3, J3Class, CylCoords, DirectSum, SolutionSet]

CONSTANTS: dict[str, Value] = {
    "j": core.J,
    "alpha": basis.ALPHA,
    "beta": basis.BETA,
    "gamma": basis.GAMMA,
    "pi": math.pi,
    "one": core.ONE,
    "zero": core.ZERO,
}


class EvalError(J3Error):
    code = "eval_error"


class UnboundVariable(EvalError):
    code = "unbound_variable"

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class DivisionByZeroDivisor(EvalError):
    code = "division_by_zero_divisor"

    def __init__(self, cls: J3Class):
        self.cls = cls
        super().__init__(f"division by a non-invertible value ({cls.value})")


class TypeMismatch(EvalError):
    code = "type_error"


@dataclass
class EvalResult:
    value: Value
    oracle_delta: float | None = None


def _rel(x: J3, y: J3, scale: float) -> float:
    d = math.sqrt((x.u - y.u) ** 2 + (x.v - y.v) ** 2 + (x.w - y.w) ** 2)
    return d / scale if scale > 0 else d


class Evaluator:
    """Evaluates trees; with ``oracle=True`` every product and inverse is
    recomputed through the matrix representation and the largest relative
    deviation is recorded in ``oracle_delta``."""

    def __init__(self, env: Mapping[str, Value] | None = None, *, tol: float = core.DEFAULT_TOL, oracle: bool = False):
        self.env = dict(env or {})
        self.tol = tol
        self.oracle = oracle
        self.oracle_delta = 0.0

    def run(self, e: Expr) -> EvalResult:
        self.oracle_delta = 0.0
        value = self.eval(e)
        return EvalResult(value, self.oracle_delta if self.oracle else None)

    # -- checked primitives ------------------------------------------------

    def _note(self, delta: float):
        self.oracle_delta = max(self.oracle_delta, delta)

    def mul(self, s: J3, t: J3) -> J3:
        out = core.mul(s, t)
        if self.oracle:
            self._note(_rel(out, matrixrep.oracle_mul(s, t), core.modulus(s) * core.modulus(t)))
        return out

    def inverse(self, s: J3) -> J3:
        cls = core.classify(s, self.tol)
        if cls is not J3Class.INVERTIBLE:
            raise DivisionByZeroDivisor(cls)
        out = core.inverse(s, self.tol)
        if self.oracle:
            self._note(_rel(out, matrixrep.oracle_inverse(s), core.modulus(out)))
        return out

    def pow(self, s: J3, n: int) -> J3:
        if n < 0:
            s, n = self.inverse(s), -n
        out = core.pow(s, n)
        if self.oracle:
            ref = matrixrep.from_matrix(matrixrep.matpow(matrixrep.to_matrix(s), n))
            self._note(_rel(out, ref, core.modulus(s) ** n))
        return out

    # -- tree walk ------------------------------------------------------------

    def eval(self, e: Expr) -> Value:
        if isinstance(e, RealLit):
            return e.value
        if isinstance(e, J3Lit):
            return J3(e.u, e.v, e.w)
        if isinstance(e, AbgLit):
            return basis.from_abg(basis.AbgCoords(e.a, e.b, e.c))
        if isinstance(e, Var):
            if e.name in self.env:
                return self.env[e.name]
            if e.name in CONSTANTS:
                return CONSTANTS[e.name]
            raise UnboundVariable(e.name)
        if isinstance(e, Unary):
            x = self._number(self.eval(e.operand), "-")
            return -x
        if isinstance(e, Binary):
            return self._binary(e)
        if isinstance(e, Call):
            return self._call(e)
        raise TypeError(f"not an expression node: {e!r}")

    def _number(self, x: Value, what: str) -> float | J3:
        if isinstance(x, (float, J3)):
            return x
        raise TypeMismatch(f"{what}: expected a number, got {type(x).__name__}")

    def _binary(self, e: Binary) -> Value:
        lhs = self._number(self.eval(e.lhs), e.op)
        rhs = self._number(self.eval(e.rhs), e.op)
        if e.op == "^":
            if isinstance(rhs, J3):
                if rhs.v != 0.0 or rhs.w != 0.0:
                    raise TypeMismatch("exponent must be a real integer")
                rhs = rhs.u
            if rhs != int(rhs):
                raise TypeMismatch(f"exponent must be an integer, got {rhs!r}")
            n = int(rhs)
            if isinstance(lhs, float):
                if lhs == 0.0 and n < 0:
                    raise DivisionByZeroDivisor(J3Class.ZERO)
                return lhs**n
            return self.pow(lhs, n)
        if e.op in "+-":
            if isinstance(lhs, float) and isinstance(rhs, float):
                return lhs + rhs if e.op == "+" else lhs - rhs
            a, b = _promote(lhs), _promote(rhs)
            return core.add(a, b) if e.op == "+" else core.sub(a, b)
        if e.op == "*":
            if isinstance(lhs, float) and isinstance(rhs, float):
                return lhs * rhs
            if isinstance(lhs, float):
                return core.scale(lhs, rhs)
            if isinstance(rhs, float):
                return core.scale(rhs, lhs)
            return self.mul(lhs, rhs)
        if e.op == "/":
            if isinstance(rhs, float):
                if rhs == 0.0:
                    raise DivisionByZeroDivisor(J3Class.ZERO)
                return lhs / rhs if isinstance(lhs, float) else core.scale(1.0 / rhs, lhs)
            inv = self.inverse(rhs)
            return core.scale(lhs, inv) if isinstance(lhs, float) else self.mul(lhs, inv)
        raise TypeMismatch(f"unknown operator {e.op!r}")

    def _call(self, e: Call) -> Value:
        args = [self.eval(a) for a in e.args]
        f = e.func
        if f == "abg":
            a, b, c = (self._real(x, f) for x in args)
            return basis.from_abg(basis.AbgCoords(a, b, c))
        if f == "sqrt":
            return equations.sqrt_real(self._real(args[0], f))
        if f == "log" and len(args) == 2:
            k = self._real(args[1], f)
            if k != int(k):
                raise TypeMismatch(f"log branch must be an integer, got {k!r}")
            return transcend.log_branch(self._j3(args[0], f), int(k), self.tol)
        x = self._j3(args[0], f)
        if f == "conj":
            return core.conj(x)
        if f == "det":
            return core.det(x)
        if f == "mod":
            return core.modulus(x)
        if f == "alt":
            return core.altitude(x)
        if f == "dir":
            return transcend.direction(x)
        if f == "exp":
            return transcend.exp(x)
        if f == "log":
            return transcend.log(x, self.tol)
        if f == "inv":
            return self.inverse(x)
        if f == "classify":
            return core.classify(x, self.tol)
        if f == "tocyl":
            return transcend.to_cyl(x)
        if f == "phi":
            return basis.phi(x)
        raise TypeMismatch(f"unknown function {f!r}")

    def _j3(self, x: Value, where: str) -> J3:
        x = self._number(x, where)
        return _promote(x)

    def _real(self, x: Value, where: str) -> float:
        x = self._number(x, where)
        if isinstance(x, J3):
            if x.v != 0.0 or x.w != 0.0:
                raise TypeMismatch(f"{where}: expected a real argument, got {x}")
            return x.u
        return x


def _promote(x: float | J3) -> J3:
    return x if isinstance(x, J3) else J3(x, 0.0, 0.0)


def evaluate(e: Expr, env: Mapping[str, Value] | None = None, **kwargs) -> EvalResult:
    return Evaluator(env, **kwargs).run(e)
