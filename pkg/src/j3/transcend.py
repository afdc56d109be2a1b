"""Polar form, J3-trigonometric functions, exponential and logarithm.

Every J3-number factors as ``(a*alpha + r*beta) * Exp(theta*gamma)``
where ``(r, theta, a)`` are cylindrical coordinates around the line L:
``a`` is the altitude, ``r`` the distance from L measured in the
idempotent basis and ``theta`` the azimuth in the plane M.  The closed
forms below are computed in those coordinates; the series versions are
kept as independent oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .basis import GAMMA, SQRT3, AbgCoords, from_abg, to_abg
from .core import DEFAULT_TOL, ONE, ZERO, J3, add, modulus, mul, scale
from .errors import DomainError, J3Overflow, ZeroInput

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class CylCoords:
    """Radius ``r >= 0``, azimuth ``theta`` in ``(-pi, pi]`` and altitude ``a``."""

    r: float
    theta: float
    a: float


@dataclass(frozen=True, slots=True)
class PolarForm:
    """``s == p * u_dir`` with ``p = a*alpha + r*beta`` and ``u_dir = Exp(theta*gamma)``."""

    p: J3
    u_dir: J3
    cyl: CylCoords


def direction(t: J3) -> J3:
    n = modulus(t)
    if n == 0.0:
        raise ZeroInput("direction of the zero J3-number is undefined")
    return J3(t.u / n, t.v / n, t.w / n)


def _wrap(theta: float) -> float:
    # atan2 already lands in [-pi, pi]; fold the closed lower end.
    return math.pi if theta <= -math.pi else theta


def to_cyl(s: J3) -> CylCoords:
    a, b, c = to_abg(s)
    r = math.hypot(b, c)
    theta = 0.0 if r == 0.0 else _wrap(math.atan2(c, b))
    return CylCoords(r, theta, a)


def from_cyl(c: CylCoords) -> J3:
    return from_abg(AbgCoords(c.a, c.r * math.cos(c.theta), c.r * math.sin(c.theta)))


def polar_decompose(s: J3) -> PolarForm:
    cyl = to_cyl(s)
    p = from_abg(AbgCoords(cyl.a, cyl.r, 0.0))
    u_dir = from_abg(AbgCoords(1.0, math.cos(cyl.theta), math.sin(cyl.theta)))
    return PolarForm(p, u_dir, cyl)


# -- trigonometric functions of order three ------------------------------------


def trig(x: float) -> tuple[float, float, float]:
    """``(cos0, sin1, sin2)`` in closed form.

    These are the solutions of ``y''' + y == 0`` with the series
    ``sum (-1)^n x^(3n+k) / (3n+k)!`` for ``k = 0, 1, 2``.
    """
    em = math.exp(-x)
    ep = math.exp(0.5 * x)
    h = 0.5 * SQRT3 * x
    ch, sh = math.cos(h), math.sin(h)
    cos0 = (em + 2.0 * ep * ch) / 3.0
    sin1 = (-em + ep * (ch + SQRT3 * sh)) / 3.0
    sin2 = (em - ep * (ch - SQRT3 * sh)) / 3.0
    return cos0, sin1, sin2


def trig_series(x: float, n_terms: int) -> tuple[float, float, float]:
    """Truncated power series of ``(cos0, sin1, sin2)`` with ``n_terms`` terms each."""
    out = [0.0, 0.0, 0.0]
    term = 1.0  # x^k / k!
    sign = 1.0
    for k in range(3 * n_terms):
        if k and k % 3 == 0:
            sign = -sign
        out[k % 3] += sign * term
        term *= x / (k + 1)
    return out[0], out[1], out[2]


# -- exponential and logarithm --------------------------------------------------


def _exp_real(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        raise J3Overflow(f"exp({x!r}) overflows double precision") from None


def exp(x: J3) -> J3:
    """``Exp(s*alpha + t*beta + theta*gamma) = e^s alpha + e^t (cos theta beta + sin theta gamma)``."""
    s, t, theta = to_abg(x)
    es = _exp_real(s)
    et = _exp_real(t)
    try:
        return from_abg(AbgCoords(es, et * math.cos(theta), et * math.sin(theta)))
    except ValueError:
        raise J3Overflow(f"Exp({x}) overflows double precision") from None


def exp_series(x: J3, n_terms: int = 30) -> J3:
    """Truncated ``sum_{k < n_terms} x^k / k!`` built from products only."""
    total = ZERO
    term = ONE
    for k in range(n_terms):
        total = add(total, term)
        term = scale(1.0 / (k + 1), mul(term, x))
    return total


def log(y: J3, tol: float = DEFAULT_TOL) -> J3:
    """Principal logarithm ``ln(a) alpha + ln(r) beta + theta gamma``.

    Defined on the half-space of positive altitude with the line L
    removed; ``theta`` is taken in ``(-pi, pi]``.
    """
    cyl = to_cyl(y)
    n = modulus(y)
    if cyl.a <= tol * n:
        raise DomainError(f"Log({y}) is undefined: altitude {cyl.a:.6g} is not positive")
    if cyl.r <= tol * n:
        raise DomainError(f"Log({y}) is undefined: {y} lies on the line L")
    return from_abg(AbgCoords(math.log(cyl.a), math.log(cyl.r), cyl.theta))


def log_branch(y: J3, k: int, tol: float = DEFAULT_TOL) -> J3:
    return add(log(y, tol), scale(TWO_PI * k, GAMMA))


def poly_eval(coeffs: Sequence[J3], x: J3) -> J3:
    """``sum coeffs[k] * x^k`` by Horner's rule."""
    acc = ZERO
    for c in reversed(coeffs):
        acc = add(mul(acc, x), c)
    return acc

