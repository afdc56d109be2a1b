"""Linear and quadratic equations over J3-numbers.

Zero divisors make the solution sets richer than over a field: besides
empty, unique and finite sets there are whole lines and planes of
solutions.  Everything here works in the idempotent basis, where the
product decouples into a real factor (the alpha axis) and a complex
factor (the plane M).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

from .basis import ALPHA, BETA, GAMMA, AbgCoords, from_abg, to_abg
from .core import (
    DEFAULT_TOL,
    ONE,
    ZERO,
    J3,
    J3Class,
    add,
    altitude,
    classify,
    inverse,
    modulus,
    mul,
    scale,
    square,
    sub,
)
from .errors import Unsupported, ZeroLHS

# direction of the line L
L_DIR = J3(1.0, -1.0, 1.0)
# spanning vectors of the plane M
M_DIRS = (BETA, GAMMA)


class SolutionKind(enum.Enum):
    EMPTY = "empty"
    UNIQUE = "unique"
    FINITE = "finite"
    LINE = "line"
    PLANE = "plane"


@dataclass(frozen=True)
class Family:
    """Affine set ``base + sum(t_i * directions[i])``."""

    base: J3
    directions: tuple[J3, ...]

    def point(self, *params: float) -> J3:
        x = self.base
        for t, d in zip(params, self.directions):
            x = add(x, scale(t, d))
        return x


@dataclass(frozen=True)
class SolutionSet:
    """Result of an equation solver.

    ``values`` holds isolated solutions (UNIQUE or FINITE).  LINE and
    PLANE results are unions of affine ``families`` with one or two
    directions each.
    """

    kind: SolutionKind
    values: tuple[J3, ...] = ()
    families: tuple[Family, ...] = ()

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @classmethod
    def empty(cls) -> SolutionSet:
        return cls(SolutionKind.EMPTY)

    @classmethod
    def unique(cls, x: J3) -> SolutionSet:
        return cls(SolutionKind.UNIQUE, (x,))

    @classmethod
    def finite(cls, xs: Sequence[J3], tol: float = 1e-9) -> SolutionSet:
        vals = _distinct(xs, tol)
        if len(vals) == 1:
            return cls.unique(vals[0])
        return cls(SolutionKind.FINITE, tuple(vals))

    @classmethod
    def line(cls, *families: Family) -> SolutionSet:
        return cls(SolutionKind.LINE, families=tuple(families))

    @classmethod
    def plane(cls, base: J3) -> SolutionSet:
        return cls(SolutionKind.PLANE, families=(Family(base, M_DIRS),))

    def sample_points(self, params: Sequence[float] = (-2.0, -1.0, 0.0, 1.0, 2.0)) -> list[J3]:
        """Isolated values plus a grid of points from each family."""
        pts = list(self.values)
        for fam in self.families:
            if len(fam.directions) == 1:
                pts.extend(fam.point(t) for t in params)
            else:
                pts.extend(fam.point(s, t) for s in params for t in params)
        return pts


@dataclass(frozen=True)
class Discriminant:
    p: J3
    q: J3
    value: J3 = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "value", sub(square(self.p), scale(4.0, self.q)))


def _distinct(xs: Sequence[J3], tol: float) -> list[J3]:
    out: list[J3] = []
    for x in xs:
        if all(max(abs(x.u - y.u), abs(x.v - y.v), abs(x.w - y.w)) > tol for y in out):
            out.append(x)
    return out


def _coef_scale(*coeffs: J3) -> float:
    return max(1.0, *(modulus(c) for c in coeffs))


# -- linear -------------------------------------------------------------------


def lemma7_solution(s: J3, t: J3) -> J3:
    """Solution in L of ``s * x = t`` for ``s``, ``t`` both in L.

    With ``s = s0 (1, -1, 1)`` and ``t = t0 (1, -1, 1)`` the solution is
    ``t0 / (3 s0) (1, -1, 1)``.
    """
    s0 = altitude(s) / 3.0
    t0 = altitude(t) / 3.0
    return scale(t0 / (3.0 * s0), L_DIR)


def lemma8_coefficients(s: J3, t: J3) -> tuple[float, float]:
    """``(c, d)`` with ``x = c + j(c + d) + jj d`` the solution in M of ``s * x = t``.

    ``s = p + j(p + q) + jj q`` and ``t = a + j(a + b) + jj b`` are both
    in M.  The ``d`` numerator is ``p(b - a) - q(2a + b)``; the variant
    with both signs flipped does not satisfy the equation.
    """
    p, q = s.u, s.w
    a, b = t.u, t.w
    n = 3.0 * (p * p + p * q + q * q)
    c = (p * (2.0 * a + b) + q * (a + 2.0 * b)) / n
    d = (p * (b - a) - q * (2.0 * a + b)) / n
    return c, d


def lemma8_solution(s: J3, t: J3) -> J3:
    c, d = lemma8_coefficients(s, t)
    return J3(c, c + d, d)


def solve_linear(s: J3, t: J3, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve ``s * x = t``.

    ======================  =======================================
    s invertible            UNIQUE ``inverse(s) * t``
    s in L, t == 0          PLANE: all of M
    s in M, t == 0          LINE: all of L
    s zero div, t invertible  EMPTY
    s, t in different ideals  EMPTY
    s, t both in L          PLANE ``x_L + M``
    s, t both in M          LINE ``x_M + L``
    ======================  =======================================
    """
    cs = classify(s, tol)
    if cs is J3Class.ZERO:
        raise ZeroLHS("left-hand side of the linear equation is zero")
    if cs is J3Class.INVERTIBLE:
        return SolutionSet.unique(mul(inverse(s, tol), t))
    ct = classify(t, tol)
    if ct is J3Class.ZERO:
        if cs is J3Class.ZERO_DIVISOR_L:
            return SolutionSet.plane(ZERO)
        return SolutionSet.line(Family(ZERO, (L_DIR,)))
    if ct is J3Class.INVERTIBLE or ct is not cs:
        return SolutionSet.empty()
    if cs is J3Class.ZERO_DIVISOR_L:
        return SolutionSet.plane(lemma7_solution(s, t))
    return SolutionSet.line(Family(lemma8_solution(s, t), (L_DIR,)))


# -- square roots and idempotents ----------------------------------------------


def sqrt_real(r: float) -> SolutionSet:
    """All ``x`` with ``x * x == r`` for a real ``r``."""
    if r < 0:
        return SolutionSet.empty()
    if r == 0:
        return SolutionSet.unique(ZERO)
    q = math.sqrt(r)
    a = J3(q, 0.0, 0.0)
    b = J3(q / 3.0, 2.0 * q / 3.0, -2.0 * q / 3.0)
    return SolutionSet(SolutionKind.FINITE, (a, -a, b, -b))


def idempotents() -> list[J3]:
    return [ZERO, ONE, ALPHA, BETA]


# -- quadratics ------------------------------------------------------------------


def _principal_sqrt(z: complex) -> complex:
    w = cmath.sqrt(z)
    if w.real < 0 or (w.real == 0 and w.imag < 0):
        w = -w
    return w


def solve_monic_quadratic(p: J3, q: J3, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve ``x*x + p*x + q == 0``.

    Completing the square gives ``(2x + p)^2 == D`` with ``D = p^2 - 4q``.
    In the idempotent basis ``D = d1 alpha + (d2 + i d3)`` and the square
    root splits into a real root on the alpha axis (none if ``d1 < 0``)
    and a complex root on M.
    """
    disc = Discriminant(p, q).value
    zero_tol = tol * (1.0 + modulus(p) ** 2 + 4.0 * modulus(q))
    if modulus(disc) <= zero_tol:
        return SolutionSet.unique(scale(-0.5, p))
    cls = classify(disc, tol)
    d1, d2, d3 = to_abg(disc)
    if cls is J3Class.ZERO_DIVISOR_M:
        alpha_roots = [0.0]
    elif d1 < 0:
        return SolutionSet.empty()
    else:
        alpha_roots = [-math.sqrt(d1), math.sqrt(d1)]
    if cls is J3Class.ZERO_DIVISOR_L:
        m_roots = [0j]
    else:
        z = _principal_sqrt(complex(d2, d3))
        m_roots = [z, -z]
    roots = []
    for zr in m_roots:
        for ar in alpha_roots:
            y = from_abg(AbgCoords(ar, zr.real, zr.imag))
            roots.append(scale(0.5, sub(y, p)))
    return SolutionSet.finite(roots, tol * _coef_scale(p, q))


def _in_m(x: J3, tol: float) -> bool:
    return classify(x, tol) in (J3Class.ZERO, J3Class.ZERO_DIVISOR_M)


def _m_complex(x: J3) -> complex:
    _, b, c = to_abg(x)
    return complex(b, c)


def solve_quadratic(a: J3, b: J3, c: J3, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve ``a*x*x + b*x + c == 0``.

    Invertible ``a`` reduces to the monic case.  For a zero divisor
    ``a`` only the configuration with ``a`` and ``b`` both in M is
    handled.  There the left side always lies in M and ignores the
    alpha-component of ``x``, so:

    * ``c`` outside M: no roots;
    * ``c == 0``: the line L together with ``x0 + L``, where ``x0`` is the
      M-solution of ``a*x == -b``;
    * otherwise: lines ``z_k + L`` through the roots ``z_k`` of the
      complex quadratic obtained by reading ``a``, ``b``, ``c`` as
      elements of M (identified with C).
    """
    ca = classify(a, tol)
    if ca is J3Class.ZERO:
        raise ZeroLHS("leading coefficient of the quadratic is zero")
    if ca is J3Class.INVERTIBLE:
        ainv = inverse(a, tol)
        return solve_monic_quadratic(mul(ainv, b), mul(ainv, c), tol)
    if ca is not J3Class.ZERO_DIVISOR_M or not _in_m(b, tol):
        raise Unsupported("zero-divisor leading coefficient is only handled when a and b both lie in M")
    if not _in_m(c, tol):
        return SolutionSet.empty()
    whole_l = Family(ZERO, (L_DIR,))
    if classify(c, tol) is J3Class.ZERO:
        if classify(b, tol) is J3Class.ZERO:
            return SolutionSet.line(whole_l)
        return SolutionSet.line(whole_l, Family(lemma8_solution(a, scale(-1.0, b)), (L_DIR,)))
    za, zb, zc = _m_complex(a), _m_complex(b), _m_complex(c)
    root = cmath.sqrt(zb * zb - 4.0 * za * zc)
    # pick the sign that avoids cancellation, then use Vieta for the partner
    big = -(zb + root) if (zb.conjugate() * root).real >= 0 else -(zb - root)
    z1 = big / (2.0 * za)
    z2 = 2.0 * zc / big
    bases = _distinct([from_abg(AbgCoords(0.0, z.real, z.imag)) for z in (z1, z2)], tol * _coef_scale(a, b, c))
    return SolutionSet.line(*(Family(x, (L_DIR,)) for x in bases))


# -- verification --------------------------------------------------------------


def quadratic_residual(a: J3, b: J3, c: J3, x: J3) -> float:
    return modulus(add(add(mul(a, mul(x, x)), mul(b, x)), c))


def linear_residual(s: J3, t: J3, x: J3) -> float:
    return modulus(sub(mul(s, x), t))


def verify_solutions(solutions: SolutionSet, residual, coeffs: Sequence[J3], rtol: float = 1e-8) -> float:
    """Substitute every (sampled) solution and return the worst residual.

    ``residual`` maps a candidate to the modulus of the equation's
    left-minus-right side.  Raises ``AssertionError`` when a residual
    exceeds ``rtol * (1 + sum of coefficient moduli)``.
    """
    bound = rtol * (1.0 + sum(modulus(k) for k in coeffs))
    worst = 0.0
    for x in solutions.sample_points():
        r = residual(x)
        worst = max(worst, r)
        if r > bound:
            raise AssertionError(f"solution {x} leaves residual {r:.3g} > {bound:.3g}")
    return worst
