"""J3-numbers: the value type, the commutative product and scalar metrics.

A J3-number is ``u + j*v + jj*w`` where the operator ``j`` cycles the
standard basis ``e1 -> e2 -> e3 -> -e1`` so that ``j*j*j == -1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real

from .errors import NotInvertible

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class J3:
    """Immutable J3-number with standard coordinates ``(u, v, w)``.

    ``==`` compares components exactly; use :meth:`isclose` for a
    tolerance-based comparison.  Arithmetic operators map onto the module
    functions (``*`` is the commutative product, ``/`` multiplies by the
    inverse of the right operand).
    """

    u: float
    v: float
    w: float

    def __post_init__(self):
        u, v, w = self.u, self.v, self.w
        # fast path: the arithmetic below always produces plain floats
        if type(u) is float and type(v) is float and type(w) is float:
            if math.isfinite(u + v + w) or (math.isfinite(u) and math.isfinite(v) and math.isfinite(w)):
                return
        for name in ("u", "v", "w"):
            x = getattr(self, name)
            if isinstance(x, bool) or not isinstance(x, Real):
                raise TypeError(f"J3 component {name} must be a real number, got {x!r}")
            x = float(x)
            if not math.isfinite(x):
                raise ValueError(f"J3 component {name} must be finite, got {x!r}")
            object.__setattr__(self, name, x)

    @classmethod
    def real(cls, x: float) -> J3:
        return cls(x, 0.0, 0.0)

    def __iter__(self):
        yield self.u
        yield self.v
        yield self.w

    def __repr__(self):
        return f"J3({self.u!r}, {self.v!r}, {self.w!r})"

    def isclose(self, other: J3, tol: float = 1e-12) -> bool:
        """Componentwise comparison with absolute tolerance ``tol``."""
        return (
            abs(self.u - other.u) <= tol
            and abs(self.v - other.v) <= tol
            and abs(self.w - other.w) <= tol
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __neg__(self):
        return J3(-self.u, -self.v, -self.w)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Real) and not isinstance(other, bool):
            return scale(other, self)
        if isinstance(other, J3):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real) and not isinstance(other, bool):
            return scale(1.0 / other, self)
        if isinstance(other, J3):
            return mul(self, inverse(other))
        return NotImplemented

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, inverse(self))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return pow(inverse(self), -n)
        return pow(self, n)

    def __abs__(self):
        return modulus(self)


def _coerce(x):
    if isinstance(x, J3):
        return x
    if isinstance(x, Real) and not isinstance(x, bool):
        return J3(x, 0.0, 0.0)
    return NotImplemented


ZERO = J3(0.0, 0.0, 0.0)
ONE = J3(1.0, 0.0, 0.0)
J = J3(0.0, 1.0, 0.0)


class J3Class(enum.Enum):
    ZERO = "Zero"
    INVERTIBLE = "Invertible"
    ZERO_DIVISOR_L = "ZeroDivisorL"
    ZERO_DIVISOR_M = "ZeroDivisorM"

    def __str__(self):
        return self.value


def add(a: J3, b: J3) -> J3:
    return J3(a.u + b.u, a.v + b.v, a.w + b.w)


def sub(a: J3, b: J3) -> J3:
    return J3(a.u - b.u, a.v - b.v, a.w - b.w)


def scale(k: float, a: J3) -> J3:
    return J3(k * a.u, k * a.v, k * a.w)


def mul(t: J3, s: J3) -> J3:
    """The commutative product of two J3-numbers.

    The sums are grouped so that swapping ``t`` and ``s`` performs the
    same floating point operations, making the result bit-for-bit
    symmetric.
    """
    a, b, c = t.u, t.v, t.w
    u, v, w = s.u, s.v, s.w
    return J3(
        a * u - (b * w + c * v),
        (a * v + b * u) - c * w,
        (a * w + c * u) + b * v,
    )


def apply_j(s: J3) -> J3:
    """Apply the generator ``j``: ``(u, v, w) -> (-w, u, v)``."""
    return J3(-s.w, s.u, s.v)


def modulus(s: J3) -> float:
    return math.sqrt(s.u * s.u + s.v * s.v + s.w * s.w)


def altitude(s: J3) -> float:
    """``u - v + w``; multiplicative under the product."""
    return s.u - s.v + s.w


def det(s: J3) -> float:
    """Determinant ``u^3 - v^3 + w^3 + 3uvw`` of the matrix representation."""
    u, v, w = s.u, s.v, s.w
    return u * u * u - v * v * v + w * w * w + 3.0 * u * v * w


def cone_form(s: J3) -> float:
    """``uv - uw + vw``.

    Satisfies ``|s*t|^2 == |s|^2 |t|^2 + 2 cone_form(s) cone_form(t)``, so
    the law of moduli holds exactly when either factor lies on the cone
    ``cone_form == 0``.
    """
    return s.u * s.v - s.u * s.w + s.v * s.w


def conj(s: J3) -> J3:
    return J3(s.u, -s.w, -s.v)


def square(s: J3) -> J3:
    u, v, w = s.u, s.v, s.w
    return J3(u * u - 2.0 * v * w, 2.0 * u * v - w * w, v * v + 2.0 * u * w)


def pow(s: J3, n: int) -> J3:  # noqa: A001 - mirrors the math name on purpose
    """``s`` raised to a non-negative integer power (square and multiply)."""
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    result = ONE
    base = s
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def subspace_residuals(s: J3) -> tuple[float, float]:
    """Distances of ``s`` from the plane M and from the line L, relative to ``|s|``.

    Returns ``(res_m, res_l)``.  ``res_m`` is ``|u - v + w| / |s|`` and
    ``res_l`` is ``sqrt((u+v)^2 + (u-w)^2 + (v+w)^2) / |s|``.  The
    determinant factors as ``altitude * res_l^2 * |s|^2 / 2``, so ``s`` is
    a zero divisor exactly when one of the two vanishes.
    """
    n = modulus(s)
    if n == 0.0:
        return 0.0, 0.0
    u, v, w = s.u / n, s.v / n, s.w / n
    res_m = abs(u - v + w)
    res_l = math.sqrt((u + v) ** 2 + (u - w) ** 2 + (v + w) ** 2)
    return res_m, res_l


def classify(s: J3, tol: float = DEFAULT_TOL) -> J3Class:
    """Tag ``s`` as zero, invertible, or a zero divisor in L or in M.

    ``tol`` is absolute for the zero test and relative to ``|s|`` for the
    two subspace tests, which keeps the result scale-invariant.  When
    both subspace tests pass the smaller residual wins.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    if modulus(s) <= tol:
        return J3Class.ZERO
    res_m, res_l = subspace_residuals(s)
    in_m = res_m <= tol
    in_l = res_l <= tol
    if in_m and in_l:
        return J3Class.ZERO_DIVISOR_M if res_m <= res_l else J3Class.ZERO_DIVISOR_L
    if in_m:
        return J3Class.ZERO_DIVISOR_M
    if in_l:
        return J3Class.ZERO_DIVISOR_L
    return J3Class.INVERTIBLE


def inverse(s: J3, tol: float = DEFAULT_TOL) -> J3:
    """Multiplicative inverse; raises :class:`NotInvertible` for zero divisors."""
    cls = classify(s, tol)
    if cls is not J3Class.INVERTIBLE:
        raise NotInvertible(s, cls)
    u, v, w = s.u, s.v, s.w
    d = det(s)
    return J3((u * u + v * w) / d, (-w * w - u * v) / d, (v * v - u * w) / d)
