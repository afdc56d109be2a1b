"""3x3 Toeplitz representation of J3-numbers.

``u + j*v + jj*w`` is represented by::

    [[u, -w, -v],
     [v,  u, -w],
     [w,  v,  u]]

The first column carries ``(u, v, w)``.  Matrix products of such
matrices stay in the pattern and reproduce the J3 product, which makes
this module an independent oracle for :mod:`j3.core`.  The transpose
has first column ``(u, -w, -v)``, i.e. it is the representation of the
conjugate ``conj(s)`` under the same column convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import to_abg
from .core import J3
from .errors import PatternViolation, Singular

Rows = tuple[tuple[float, float, float], tuple[float, float, float], tuple[float, float, float]]

PATTERN_TOL = 1e-12
PIVOT_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class ToeplitzMat:
    rows: Rows

    def __post_init__(self):
        viol = pattern_violation(self.rows)
        r0, r1, r2 = self.rows
        scale = max(1.0, *map(abs, r0), *map(abs, r1), *map(abs, r2))
        if viol > PATTERN_TOL * scale:
            raise PatternViolation(f"matrix does not have the J3 Toeplitz pattern (deviation {viol:.3g})")

    def __matmul__(self, other: ToeplitzMat) -> ToeplitzMat:
        return ToeplitzMat(matmul(self.rows, other.rows))


@dataclass(frozen=True, slots=True)
class BlockDiagMat:
    """``[[a, 0, 0], [0, b, -c], [0, c, b]]``."""

    a: float
    b: float
    c: float

    @property
    def rows(self) -> Rows:
        return ((self.a, 0.0, 0.0), (0.0, self.b, -self.c), (0.0, self.c, self.b))

    def det(self) -> float:
        return self.a * (self.b * self.b + self.c * self.c)


def pattern_violation(rows) -> float:
    """Largest absolute deviation among the six pattern equalities."""
    (m00, m01, m02), (m10, m11, m12), (m20, m21, m22) = rows
    return max(
        abs(m11 - m00),
        abs(m22 - m00),
        abs(m21 - m10),
        abs(m02 + m10),
        abs(m12 - m01),
        abs(m01 + m20),
    )


def matmul(x, y) -> Rows:
    (b00, b01, b02), (b10, b11, b12), (b20, b21, b22) = y
    return tuple(
        (a0 * b00 + a1 * b10 + a2 * b20, a0 * b01 + a1 * b11 + a2 * b21, a0 * b02 + a1 * b12 + a2 * b22)
        for a0, a1, a2 in x
    )


def transpose(rows) -> Rows:
    return tuple(tuple(rows[i][k] for i in range(3)) for k in range(3))


def det3(rows) -> float:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def to_matrix(s: J3) -> ToeplitzMat:
    u, v, w = s.u, s.v, s.w
    return ToeplitzMat(((u, -w, -v), (v, u, -w), (w, v, u)))


def from_matrix(m: ToeplitzMat | Rows) -> J3:
    rows = m.rows if isinstance(m, ToeplitzMat) else ToeplitzMat(m).rows
    return J3(rows[0][0], rows[1][0], rows[2][0])


def matpow(m: ToeplitzMat, n: int) -> ToeplitzMat:
    result = ToeplitzMat(((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)))
    for _ in range(n):
        result = result @ m
    return result


def oracle_mul(s: J3, t: J3) -> J3:
    return from_matrix(to_matrix(s) @ to_matrix(t))


def solve3(rows, rhs) -> tuple[float, float, float]:
    """Gaussian elimination with partial pivoting on a 3x3 system.

    Raises :class:`Singular` when a pivot falls below ``PIVOT_TOL`` times
    the largest pivot seen so far.
    """
    a = [[*r, b] for r, b in zip(rows, rhs)]
    largest = 0.0
    for col in range(3):
        p = col
        for r in range(col + 1, 3):
            if abs(a[r][col]) > abs(a[p][col]):
                p = r
        piv = abs(a[p][col])
        largest = max(largest, piv)
        if largest == 0.0 or piv <= PIVOT_TOL * largest:
            raise Singular("matrix is singular to working precision")
        a[col], a[p] = a[p], a[col]
        top = a[col]
        for r in range(col + 1, 3):
            row = a[r]
            f = row[col] / top[col]
            for k in range(col, 4):
                row[k] -= f * top[k]
    x2 = a[2][3] / a[2][2]
    x1 = (a[1][3] - a[1][2] * x2) / a[1][1]
    x0 = (a[0][3] - a[0][1] * x1 - a[0][2] * x2) / a[0][0]
    return x0, x1, x2


def oracle_inverse(s: J3) -> J3:
    """Inverse of ``s`` from the linear system ``T x = (1, 0, 0)``."""
    return J3(*solve3(to_matrix(s).rows, (1.0, 0.0, 0.0)))


def conj_matrix(s: J3) -> ToeplitzMat:
    return ToeplitzMat(transpose(to_matrix(s).rows))


def to_block_diag(s: J3) -> BlockDiagMat:
    a, b, c = to_abg(s)
    return BlockDiagMat(a, b, c)
