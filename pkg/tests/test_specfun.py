import math
from fractions import Fraction

import numpy as np
import pytest

from axialmono.specfun import (ConvergenceError, bessel_j, double_factorial, exp_identity_rhs,
                               gamma_half, gegenbauer, gegenbauer_at_one,
                               gegenbauer_weighted_integral, funk_hecke_integral,
                               power_identity_rhs, selftest, sphere_area, weighted_integral)


def test_gegenbauer_low_degree():
    assert gegenbauer(0, Fraction(1, 2), Fraction(3, 10)) == 1
    assert gegenbauer(1, Fraction(1, 2), Fraction(3, 10)) == Fraction(3, 10)
    # Legendre P2 at nu = 1/2
    assert gegenbauer(2, Fraction(1, 2), Fraction(1, 3)) == Fraction(3 * Fraction(1, 9) - 1, 2)
    with pytest.raises(ValueError):
        gegenbauer(-1, 1, 0.0)


@pytest.mark.parametrize("nu", [Fraction(1, 2), Fraction(1), Fraction(3, 2)])
def test_gegenbauer_at_one(nu):
    for k in range(7):
        expected = math.gamma(2 * nu + k) / (math.factorial(k) * math.gamma(2 * nu))
        assert gegenbauer(k, nu, Fraction(1)) == gegenbauer_at_one(k, nu)
        assert math.isclose(float(gegenbauer_at_one(k, nu)), expected, rel_tol=1e-14)


def test_gamma_and_double_factorial():
    assert double_factorial(5) == 15
    assert double_factorial(0) == double_factorial(-1) == 1
    with pytest.raises(ValueError):
        double_factorial(-2)
    assert math.isclose(gamma_half(1), math.sqrt(math.pi))
    assert math.isclose(gamma_half(3), math.sqrt(math.pi) / 2)
    for n in range(1, 15):
        assert math.isclose(gamma_half(n), math.gamma(n / 2), rel_tol=1e-14)


def test_bessel_half_order_closed_form():
    for r in (0.5, 1.0, 2.0):
        closed = math.sqrt(2 / (math.pi * r)) * math.sin(r)
        assert abs(bessel_j(0.5, r) - closed) < 1e-12 * abs(closed)
        closed = math.sqrt(2 / (math.pi * r)) * (math.sin(r) / r - math.cos(r))
        assert abs(bessel_j(1.5, r) - closed) < 1e-12 * abs(closed)


def test_bessel_against_scipy():
    from scipy.special import iv, jv
    r = np.linspace(0.1, 12, 40)
    for nu in (0, 1, 2.5, 4):
        # cancellation in the alternating series is bounded by the sum of |terms|, i.e. I_nu(r)
        err = np.abs(bessel_j(nu, r) - jv(nu, r))
        assert np.all(err <= 1e-14 * iv(nu, r))


def test_bessel_recurrence_and_origin():
    rng = np.random.default_rng(1)
    for _ in range(10):
        nu, r = rng.uniform(0.5, 5), rng.uniform(0.2, 6)
        lhs = 2 * nu / r * bessel_j(nu, r)
        rhs = bessel_j(nu - 1, r) + bessel_j(nu + 1, r)
        assert abs(lhs - rhs) < 1e-10 * abs(rhs)
    assert bessel_j(1.5, 0.0) == 0.0
    assert bessel_j(0, 0.0) == 1.0
    with pytest.raises(ValueError):
        bessel_j(1, -1.0)
    with pytest.raises(ConvergenceError):
        bessel_j(0, 200.0, max_terms=5)


def test_weighted_integral_trivial():
    assert math.isclose(weighted_integral(lambda t: np.ones_like(t), 0.5).value, 2.0)
    assert math.isclose(funk_hecke_integral(lambda t: np.ones_like(t), 0, 3), 2.0)


@pytest.mark.parametrize("a", [1.0, 2.5])
@pytest.mark.parametrize("k", range(4))
def test_exponential_identity(a, k):
    lhs = gegenbauer_weighted_integral(lambda t: np.exp(1j * a * t), k, 0.5)
    rhs = exp_identity_rhs(a, k, 0.5)
    assert abs(lhs - rhs) < 1e-8 * abs(rhs)


@pytest.mark.parametrize("nu", [0.5, 1.0, 1.5])
def test_power_identity(nu):
    for k in range(4):
        for rho in range(3):
            lhs = 0.5 * gegenbauer_weighted_integral(lambda t: t ** (k + 2 * rho), k, nu)
            assert math.isclose(lhs, power_identity_rhs(k, rho, nu), rel_tol=1e-8)


def test_orthogonality():
    for j in range(6):
        for k in range(j):
            val = gegenbauer_weighted_integral(lambda t: gegenbauer(j, 1.0, t), k, 1.0)
            assert abs(val) < 1e-10


def test_sphere_area():
    assert math.isclose(sphere_area(2), 2 * math.pi)
    assert math.isclose(sphere_area(3), 4 * math.pi)


def test_selftest_passes():
    rows = selftest()
    assert [r["identity"] for r in rows] == ["gegenbauer_at_one", "bessel_recurrence",
                                             "exp_gegenbauer_integral",
                                             "power_gegenbauer_integral"]
    assert all(r["passed"] for r in rows)
