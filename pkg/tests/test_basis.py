import math
import random

from conftest import j3s, rel_close
from hypothesis import given
from hypothesis import strategies as st

from j3 import ALPHA, BETA, GAMMA, ONE, ZERO, J3, add, conj, modulus, mul, scale
from j3.basis import AbgCoords, DirectSum, dsum_mul, from_abg, phi, phi_inv, to_abg

S3 = math.sqrt(3)


def close3(x, y, tol):
    return all(abs(a - b) <= tol for a, b in zip(x, y))


def test_to_abg_examples():
    assert close3(to_abg(ONE), (1, 1, 0), 1e-15)
    assert close3(to_abg(J3(0, S3 / 3, S3 / 3)), (0, 0, 1), 1e-15)
    assert close3(to_abg(J3(0, 0, 1)), (1, -0.5, S3 / 2), 1e-15)


def test_from_abg_examples():
    assert from_abg(AbgCoords(1, 0, 0)).isclose(ALPHA, 1e-15)
    assert from_abg(AbgCoords(0, 1, 0)).isclose(BETA, 1e-15)
    assert from_abg(AbgCoords(0, 0, 1)).isclose(GAMMA, 1e-15)
    assert ALPHA.isclose(J3(1, -1, 1) * (1 / 3), 1e-16)
    assert BETA.isclose(J3(2, 1, -1) * (1 / 3), 1e-16)


@given(j3s)
def test_abg_roundtrip(s):
    assert rel_close(from_abg(to_abg(s)), s, 1e-13, 1 + modulus(s))


@given(st.floats(-50, 50), st.floats(-50, 50), st.floats(-50, 50))
def test_modulus_in_abg(a, b, c):
    expect = math.sqrt((a * a + 2 * b * b + 2 * c * c) / 3)
    assert math.isclose(modulus(from_abg(AbgCoords(a, b, c))), expect, rel_tol=1e-12, abs_tol=1e-12)


def test_basis_orthogonal_euclidean():
    def dot(x, y):
        return x.u * y.u + x.v * y.v + x.w * y.w

    assert abs(dot(ALPHA, BETA)) <= 1e-15
    assert abs(dot(ALPHA, GAMMA)) <= 1e-15
    assert abs(dot(BETA, GAMMA)) <= 1e-15


def test_multiplication_table():
    assert mul(ALPHA, ALPHA).isclose(ALPHA, 1e-15)
    assert mul(BETA, BETA).isclose(BETA, 1e-15)
    assert mul(BETA, GAMMA).isclose(GAMMA, 1e-15)
    assert mul(GAMMA, GAMMA).isclose(-BETA, 1e-15)
    assert mul(ALPHA, BETA).isclose(ZERO, 1e-15)
    assert mul(ALPHA, GAMMA).isclose(ZERO, 1e-15)


def test_phi_examples():
    assert close3(phi(ONE), (1, 1, 0), 1e-15)
    assert close3(phi(ALPHA), (1, 0, 0), 1e-15)
    assert close3(phi(BETA), (0, 1, 0), 1e-15)
    assert close3(phi(GAMMA), (0, 0, 1), 1e-15)


def test_phi_inv_examples():
    assert phi_inv(DirectSum(1, 1, 0)).isclose(ONE, 1e-15)
    assert phi_inv(DirectSum(0, 0, 1)).isclose(GAMMA, 1e-15)
    x, y = 0.7, -1.9
    expect = J3(2 * x / 3, (x + y * S3) / 3, (-x + y * S3) / 3)
    assert phi_inv(DirectSum(0, x, y)).isclose(expect, 1e-15)


def test_dsum_mul_examples():
    assert tuple(dsum_mul(DirectSum(1, 1, 0), DirectSum(2.5, -1, 3))) == (2.5, -1, 3)
    assert tuple(dsum_mul(DirectSum(2, 0, 1), DirectSum(3, 0, 1))) == (6, -1, 0)
    assert tuple(dsum_mul(DirectSum(4, 0, 0), DirectSum(0, 2, 3))) == (0, 0, 0)
    assert DirectSum(0, 1, 2).z == 1 + 2j


@given(st.tuples(st.floats(-100, 100), st.floats(-100, 100), st.floats(-100, 100)))
def test_phi_bijective(uvw):
    s = J3(*uvw)
    assert rel_close(phi_inv(phi(s)), s, 1e-13, 1 + modulus(s))
    d = DirectSum(*uvw)
    assert close3(phi(phi_inv(d)), d, 1e-13 * (1 + max(map(abs, uvw))))


def test_phi_linear_and_multiplicative():
    rng = random.Random(7)
    worst_lin = worst_mul = 0.0
    for _ in range(10_000):
        s = J3(*(rng.uniform(-10, 10) for _ in range(3)))
        t = J3(*(rng.uniform(-10, 10) for _ in range(3)))
        k1, k2 = rng.uniform(-5, 5), rng.uniform(-5, 5)
        lhs = phi(add(scale(k1, s), scale(k2, t)))
        ps, pt = phi(s), phi(t)
        rhs = (k1 * ps.r + k2 * pt.r, k1 * ps.zx + k2 * pt.zx, k1 * ps.zy + k2 * pt.zy)
        worst_lin = max(worst_lin, math.dist(tuple(lhs), rhs) / (abs(k1) * modulus(s) + abs(k2) * modulus(t)))
        lhs = phi(mul(s, t))
        rhs = dsum_mul(ps, pt)
        worst_mul = max(worst_mul, math.dist(tuple(lhs), tuple(rhs)) / (modulus(s) * modulus(t)))
    assert worst_lin <= 1e-11
    assert worst_mul <= 1e-11


@given(j3s)
def test_phi_of_conjugate(s):
    p, q = phi(s), phi(conj(s))
    tol = 1e-12 * (1 + modulus(s))
    assert abs(p.r - q.r) <= tol
    assert abs(p.zx - q.zx) <= tol
    assert abs(p.zy + q.zy) <= tol
