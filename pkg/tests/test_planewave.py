import math

import numpy as np
import pytest

from axialmono.clifford import Multivector, array_product
from axialmono.planewave import (Exponential, PowerSeries, assemble_profiles, bessel_prefactor,
                                 double_factorial_prefactor, example1_profiles,
                                 example2_block, example2_constant, example2_profile,
                                 funk_hecke_lhs, funk_hecke_rhs, i_h_direct, i_h_direct_array,
                                 i_h_profiles, numeric_cr, plane_wave, plane_wave_array,
                                 polynomial_prefactor, sphere_rule)
from axialmono.spherical import inner_monogenic_basis

T = np.array([0.6, 0.0, 0.8])


def test_plane_wave_constant_profile():
    w = plane_wave(PowerSeries((1,)), T, 0.3, [1.0, 2.0, 3.0])
    assert w == Multivector(3, {0: 1, 1: -0.6j, 4: -0.8j})
    with pytest.raises(ValueError):
        plane_wave(Exponential(), [1.0, 1.0, 0.0], 0.0, [0, 0, 0])


def test_zero_divisors():
    one = np.zeros(8, dtype=complex)
    one[0] = 1
    w = plane_wave_array(PowerSeries((1,)), T, 0, np.zeros(3))
    assert np.allclose(array_product(2 * one - w, w, 3), 0)


def test_plane_wave_is_monogenic():
    rng = np.random.default_rng(0)
    f = lambda x0, x: plane_wave_array(Exponential(), T, x0, x)
    for _ in range(3):
        x0, x = rng.uniform(-1, 1), rng.normal(size=3)
        assert np.max(np.abs(numeric_cr(f, x0, x, 3))) < 1e-8


def test_sphere_rule():
    rule = sphere_rule(3, 10)
    assert math.isclose(rule.weights.sum(), 4 * math.pi, rel_tol=1e-14)
    with pytest.raises(ValueError):
        sphere_rule(4, 4)


def test_b_equals_c_and_odd_vanishing():
    a, b, c, d = i_h_profiles(Exponential(), 3, 1, 1, 0.2, 1.3)
    assert b == c
    # h = z^(k+2n) at x0 = 0 makes the B integrand odd
    _, b, _, _ = i_h_profiles(PowerSeries.power(3), 3, 1, 1, 0.0, 0.7)
    assert abs(b) < 1e-14


def test_example1_odd_m_classical_constant():
    for k in range(3):
        for ell in range(4):
            got = np.array(i_h_profiles(Exponential(), 3, k, ell, 0.4, 1.7))
            ref = np.array(example1_profiles(3, k, ell, 0.4, 1.7))
            assert np.max(np.abs(got - ref)) < 1e-8 * np.max(np.abs(ref))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_example1_general_constant(m):
    for k in range(3):
        got = np.array(i_h_profiles(Exponential(), m, k, 1, -0.3, 2.2))
        ref = np.array(example1_profiles(m, k, 1, -0.3, 2.2, prefactor=bessel_prefactor))
        assert np.max(np.abs(got - ref)) < 1e-8 * np.max(np.abs(ref))


def test_prefactor_relations():
    for m in (3, 5, 7):
        assert math.isclose(bessel_prefactor(m), double_factorial_prefactor(m))
    for m in (2, 4, 6):
        assert math.isclose(bessel_prefactor(m) / double_factorial_prefactor(m),
                            math.sqrt(math.pi / 2))
    assert polynomial_prefactor(3) == 2.0
    assert polynomial_prefactor(4) == math.pi


def test_example2_constant_value():
    assert math.isclose(example2_constant(3, 0, 1, "even").real,
                        2 * math.sqrt(2 * math.pi) / 15)
    assert example2_constant(3, 0, 1, "even").imag == 0
    with pytest.raises(ValueError):
        example2_constant(3, 0, 0, "even")
    with pytest.raises(ValueError):
        example2_constant(3, 0, 0, "both")


@pytest.mark.parametrize("parity,n", [("even", 1), ("odd", 0), ("odd", 1)])
def test_example2_with_polynomial_constant(parity, n):
    rule = sphere_rule(3, 16)
    rng = np.random.default_rng(2)
    for k in range(3):
        P = inner_monogenic_basis(3, k, 1)[0]
        F = example2_block(P, n, parity)
        h = example2_profile(k, n, parity)
        c = example2_constant(3, k, n, parity, prefactor=polynomial_prefactor)
        for _ in range(3):
            pt = np.concatenate([[rng.uniform(-1, 1)], rng.normal(size=3)])
            want = c * F.eval_array(pt[None, :])[0]
            got = i_h_direct_array(h, P, pt[0], pt[1:], rule)
            assert np.max(np.abs(got - want)) < 1e-9 * np.max(np.abs(want))


def test_direct_matches_profiles():
    rule = sphere_rule(3, 30)
    x = np.array([0.3, -0.5, 0.9])
    r = float(np.linalg.norm(x))
    for h in (Exponential(), PowerSeries.power(3)):
        for k in range(3):
            for ell in range(4):
                for P in inner_monogenic_basis(3, k, ell)[:1]:
                    direct = i_h_direct(h, P, 0.2, x, rule).to_array()
                    prof = assemble_profiles(i_h_profiles(h, 3, k, ell, 0.2, r), P, x)
                    assert np.max(np.abs(direct - prof)) < 1e-7


def test_direct_integral_is_two_sided():
    rule = sphere_rule(3, 30)
    P = inner_monogenic_basis(3, 1, 1)[0]
    f = lambda x0, x: i_h_direct_array(Exponential(), P, x0, x, rule)
    x = np.array([0.4, 0.1, -0.3])
    assert np.max(np.abs(numeric_cr(f, 0.1, x, 3, "left"))) < 1e-6
    assert np.max(np.abs(numeric_cr(f, 0.1, x, 3, "right"))) < 1e-6


def test_funk_hecke():
    rule = sphere_rule(3, 40)
    xi = np.array([0.0, 0.6, 0.8])
    for k in range(4):
        for P in inner_monogenic_basis(3, k, 1)[:1]:
            for F in (lambda t: np.exp(1.5j * t), lambda t: t ** 3 + t):
                lhs = funk_hecke_lhs(F, P.poly, xi, rule)
                rhs = funk_hecke_rhs(F, P.poly, k, xi)
                assert np.allclose(lhs, rhs, rtol=1e-8, atol=1e-12)
