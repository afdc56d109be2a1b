"""The idempotent basis {alpha, beta, gamma} and the map onto R (+) C.

``alpha`` spans the line L and is an idempotent; ``beta`` and ``gamma``
span the plane M, with ``beta`` the idempotent unit of M and
``gamma * gamma == -beta``.  In these coordinates the product splits into
a real product on the alpha axis and a complex product on M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import J3

SQRT3 = math.sqrt(3.0)

ALPHA = J3(1 / 3, -1 / 3, 1 / 3)
BETA = J3(2 / 3, 1 / 3, -1 / 3)
GAMMA = J3(0.0, SQRT3 / 3, SQRT3 / 3)


@dataclass(frozen=True, slots=True)
class AbgCoords:
    """Coefficients of ``a*alpha + b*beta + c*gamma``."""

    a: float
    b: float
    c: float

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c


@dataclass(frozen=True, slots=True)
class DirectSum:
    """Element ``(r, zx + i*zy)`` of the direct sum of R and C."""

    r: float
    zx: float
    zy: float

    @property
    def z(self) -> complex:
        return complex(self.zx, self.zy)

    def __iter__(self):
        yield self.r
        yield self.zx
        yield self.zy


def to_abg(s: J3) -> AbgCoords:
    u, v, w = s.u, s.v, s.w
    return AbgCoords(u - v + w, (2.0 * u + v - w) / 2.0, SQRT3 * (v + w) / 2.0)


def from_abg(c: AbgCoords) -> J3:
    a, b, g = c.a, c.b, c.c
    return J3((a + 2.0 * b) / 3.0, (-a + b + g * SQRT3) / 3.0, (a - b + g * SQRT3) / 3.0)


def phi(s: J3) -> DirectSum:
    a, b, c = to_abg(s)
    return DirectSum(a, b, c)


def phi_inv(d: DirectSum) -> J3:
    return from_abg(AbgCoords(d.r, d.zx, d.zy))


def dsum_mul(p: DirectSum, q: DirectSum) -> DirectSum:
    return DirectSum(p.r * q.r, p.zx * q.zx - p.zy * q.zy, p.zx * q.zy + p.zy * q.zx)
