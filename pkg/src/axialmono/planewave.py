"""Monogenic plane waves and their sphere integrals.

Complex multivectors here are dense numpy arrays of shape ``(..., 2**m)``
(the imaginary unit commutes with every ``e_j``), converted to
:class:`~axialmono.clifford.Multivector` only at the API boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .axial import AxialQuadruple, block_first, block_second
from .clifford import Multivector, array_product, mu
from .mpoly import CliffPoly
from .specfun import bessel_j, double_factorial, funk_hecke_integral, sphere_area
from .spherical import InnerMonogenic


# --- holomorphic profiles -------------------------------------------------------

class HoloProfile:
    """A holomorphic ``h(x, y)`` evaluated through ``z = x + iy``."""

    def __call__(self, x, y):
        return self.of_z(np.asarray(x) + 1j * np.asarray(y))

    def of_z(self, z):
        raise NotImplementedError


@dataclass(frozen=True)
class PowerSeries(HoloProfile):
    """Finite power series ``sum_n c_n z^n``."""

    coeffs: tuple

    @classmethod
    def power(cls, d: int) -> "PowerSeries":
        return cls((0,) * d + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def of_z(self, z):
        out = np.zeros_like(z, dtype=complex)
        for c in reversed(self.coeffs):
            out = out * z + complex(c)
        return out


@dataclass(frozen=True)
class Exponential(HoloProfile):
    """``e^{x + iy}``."""

    def of_z(self, z):
        return np.exp(z)


# --- plane waves ----------------------------------------------------------------

def _vector_array(t: np.ndarray, m: int) -> np.ndarray:
    t = np.atleast_2d(t)
    out = np.zeros(t.shape[:-1] + (1 << m,), dtype=complex)
    for j in range(m):
        out[..., 1 << j] = t[..., j]
    return out


def plane_wave_array(h: HoloProfile, t, x0, x) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    m = t.shape[-1]
    one = np.zeros(1 << m, dtype=complex)
    one[0] = 1
    return (one - 1j * _vector_array(t, m)[0]) * h(x0, float(x @ t))


def plane_wave(h: HoloProfile, t, x0, x, tol: float = 1e-12) -> Multivector:
    """``(1 - i t) h(x0, <x, t>)`` for a unit vector ``t``."""
    t = np.asarray(t, dtype=float)
    if abs(float(t @ t) - 1) > tol:
        raise ValueError("t must be a unit vector")
    return Multivector.from_array(t.shape[-1], plane_wave_array(h, t, x0, x))


def numeric_cr(f, x0: float, x, m: int, side: str = "left", h: float = 1e-4) -> np.ndarray:
    """Central-difference ``(d/dx_0 + D) f`` (or ``f (d/dx_0 + D)``) at a point.

    ``f(x0, x)`` returns a dense multivector array; one Richardson step.
    """
    x = np.asarray(x, dtype=float)

    def deriv(j, step):
        if j == 0:
            return (f(x0 + step, x) - f(x0 - step, x)) / (2 * step)
        dx = np.zeros_like(x)
        dx[j - 1] = step
        return (f(x0, x + dx) - f(x0, x - dx)) / (2 * step)

    def rich(j):
        return (4 * deriv(j, h / 2) - deriv(j, h)) / 3

    out = rich(0).astype(complex)
    for j in range(1, m + 1):
        e = np.zeros(1 << m)
        e[1 << (j - 1)] = 1
        d = rich(j)
        out = out + (array_product(e, d, m) if side == "left" else array_product(d, e, m))
    return out


# --- sphere quadrature (m = 3) -----------------------------------------------------

@dataclass
class SphereRule:
    m: int
    nodes: np.ndarray
    weights: np.ndarray
    degree: int


def _product_rule(n: int) -> SphereRule:
    z, wz = np.polynomial.legendre.leggauss(n)
    nphi = 2 * n
    phi = 2 * np.pi * np.arange(nphi) / nphi
    s = np.sqrt(1 - z ** 2)
    nodes = np.stack([np.outer(s, np.cos(phi)).ravel(), np.outer(s, np.sin(phi)).ravel(),
                      np.repeat(z, nphi)], axis=-1)
    weights = np.repeat(wz, nphi) * (2 * np.pi / nphi)
    return SphereRule(3, nodes, weights, 2 * n - 1)


def _monomial_sphere_integral(a: int, b: int, c: int) -> float:
    if a % 2 or b % 2 or c % 2:
        return 0.0
    g = math.gamma
    return 2 * g((a + 1) / 2) * g((b + 1) / 2) * g((c + 1) / 2) / g((a + b + c + 3) / 2)


def sphere_rule(m: int, degree: int, tol: float = 1e-12) -> SphereRule:
    """Product Gauss-Legendre x trapezoid rule on S^2 integrating polynomials of
    total degree <= ``degree``; orders double until a monomial self-test passes."""
    if m != 3:
        raise ValueError("direct sphere quadrature is implemented for m = 3 only")
    n = 2
    while True:
        rule = _product_rule(n)
        if rule.degree >= degree and _selftest(rule, degree, tol):
            return rule
        n *= 2
        if n > 4096:
            raise RuntimeError("sphere rule failed its exactness self-test")


def _selftest(rule: SphereRule, degree: int, tol: float) -> bool:
    x, y, z = rule.nodes.T
    if abs(rule.weights.sum() - 4 * np.pi) > tol * 4 * np.pi:
        return False
    zpow = z[None, :] ** np.arange(degree + 1)[:, None]
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            top = degree + 1 - a - b
            vals = zpow[:top] @ (rule.weights * x ** a * y ** b)
            exact = [_monomial_sphere_integral(a, b, c) for c in range(top)]
            if np.max(np.abs(vals - exact)) > tol * 4 * np.pi:
                return False
    return True


# --- plane-wave integrals ----------------------------------------------------------

def i_h_direct(h: HoloProfile, P: InnerMonogenic, x0: float, x, rule: SphereRule) -> Multivector:
    """Sphere average of ``h(x0, <x, t>) (1 - i t) P(t) (1 - i t)``.

    Normalized by the area of S^{m-2}, matching the profile formulas of
    :func:`i_h_profiles`.
    """
    return Multivector.from_array(P.m, i_h_direct_array(h, P, x0, x, rule))


def i_h_direct_array(h, P, x0, x, rule: SphereRule) -> np.ndarray:
    m = P.m
    if rule.m != m:
        raise ValueError("sphere rule dimension does not match P")
    t = rule.nodes
    x = np.asarray(x, dtype=float)
    pts = np.concatenate([np.zeros((len(t), 1)), t], axis=1)
    pt = P.poly.eval_array(pts).astype(complex)
    one = np.zeros(1 << m, dtype=complex)
    one[0] = 1
    factor = one - 1j * _vector_array(t, m)
    integrand = array_product(array_product(factor, pt, m), factor, m)
    hv = h(x0, t @ x)
    return np.einsum("n,n,nk->k", rule.weights, hv, integrand) / sphere_area(m - 1)


def i_h_profiles(h: HoloProfile, m: int, k: int, ell: int, x0: float, r: float,
                 tol: float = 1e-12) -> tuple[complex, complex, complex, complex]:
    """Profile values ``(A_h, B_h, C_h, D_h)`` at ``(x0, r)`` via 1-D Gegenbauer integrals."""
    if r <= 0:
        raise ValueError("r must be positive")
    integral = {j: funk_hecke_integral(lambda t: h(x0, r * t), j, m, tol) for j in (k, k + 1, k + 2)}
    mu_l = mu(ell, m)
    a = r ** (-k) / (2 * k + m) * ((2 * k + m - mu_l) * integral[k] + mu_l * integral[k + 2])
    b = -1j * r ** (-k - 1) * integral[k + 1]
    d = -r ** (-k - 2) * integral[k + 2]
    return a, b, b, d


def i_h_quadruple(h: HoloProfile, P: InnerMonogenic, tol: float = 1e-12) -> AxialQuadruple:
    """Numeric axial quadruple whose profiles are evaluated by :func:`i_h_profiles`."""
    def slot(i):
        def f(x0, r):
            return np.vectorize(lambda a, b: i_h_profiles(h, P.m, P.k, P.ell, a, b, tol)[i],
                                otypes=[complex])(x0, r)
        return f
    return AxialQuadruple(slot(0), slot(1), slot(2), slot(3), P)


def assemble_profiles(values, P: InnerMonogenic, x) -> np.ndarray:
    """``A P(x) + B x P(x) + C P(x) x + D x P(x) x`` as a dense array."""
    m = P.m
    x = np.asarray(x, dtype=float)
    pt = P.poly.eval_array(np.concatenate([[0.0], x])[None, :])[0].astype(complex)
    xv = _vector_array(x, m)[0]
    xp = array_product(xv, pt, m)
    px = array_product(pt, xv, m)
    xpx = array_product(xp, xv, m)
    a, b, c, d = values
    return a * pt + b * xp + c * px + d * xpx


# --- closed forms ----------------------------------------------------------------

def bessel_prefactor(m: int) -> float:
    """``C_k(1)^{-1} int e^{irt} C_k(t) w(t) dt = prefactor i^k r^{-nu} J_{k+nu}(r)``.

    Equals ``sqrt(pi) 2^nu Gamma((m-1)/2)`` with ``nu = (m-2)/2``; for odd m this is
    ``sqrt(2 pi) (m-3)!!``.
    """
    nu = (m - 2) / 2
    return math.sqrt(math.pi) * 2 ** nu * math.gamma((m - 1) / 2)


def double_factorial_prefactor(m: int) -> float:
    """The classical closed form ``sqrt(2 pi) (m-3)!!``.

    It agrees with :func:`bessel_prefactor` for odd m only; for even m it is too
    small by ``sqrt(pi / 2)``.  Against :func:`polynomial_prefactor` it is too
    large by ``sqrt(pi / 2)`` for odd m and too small by the same factor for even m.
    """
    return math.sqrt(2 * math.pi) * double_factorial(m - 3)


def polynomial_prefactor(m: int) -> float:
    """Prefactor for polynomial ``h``: ``2 (m-3)!!`` for odd m, ``pi (m-3)!!`` for even m.

    Obtained from the half-line power integral; at m = 3 every constant is rational.
    """
    return (2 if m % 2 else math.pi) * double_factorial(m - 3)


def example1_radial(m: int, k: int, ell: int):
    """Radial parts ``(a, b, d)`` of the Bessel-type axial two-sided monogenic."""
    order = k + m / 2

    def b(r):
        return np.asarray(r, dtype=float) ** (-order) * bessel_j(order, r)

    def d(r):
        return np.asarray(r, dtype=float) ** (-order - 1) * bessel_j(order + 1, r)

    def a(r):
        return (2 * k + m - mu(ell, m)) * b(r) - np.asarray(r, dtype=float) ** 2 * d(r)

    return a, b, d


def example1_quadruple(P: InnerMonogenic) -> AxialQuadruple:
    """``(e^{x0} a, e^{x0} b, e^{x0} b, e^{x0} d)`` attached to ``P``."""
    a, b, d = example1_radial(P.m, P.k, P.ell)
    return AxialQuadruple(lambda x0, r: np.exp(x0) * a(r), lambda x0, r: np.exp(x0) * b(r),
                          lambda x0, r: np.exp(x0) * b(r), lambda x0, r: np.exp(x0) * d(r), P)


def example1_profiles(m: int, k: int, ell: int, x0: float, r: float,
                      prefactor=double_factorial_prefactor) -> tuple[complex, complex, complex, complex]:
    """Closed-form ``(A_h, B_h, C_h, D_h)`` for ``h = e^{x + iy}``.

    The default constant is the classical ``sqrt(2 pi) (m-3)!!``, exact for odd
    m; pass ``prefactor=bessel_prefactor`` for the form valid in every dimension.
    """
    a, b, d = example1_radial(m, k, ell)
    c = prefactor(m) * 1j ** k * math.exp(x0)
    return c * a(r), c * b(r), c * b(r), c * d(r)


def example2_constant(m: int, k: int, n: int, parity: str,
                      prefactor=double_factorial_prefactor) -> complex:
    """Scale relating the plane-wave integral of ``(x+iy)^d`` to a block.

    ``parity='even'`` pairs ``d = k + 2n`` with the first block family,
    ``parity='odd'`` pairs ``d = k + 2n + 1`` with the second.  The default
    constant is the classical one built on ``sqrt(2 pi) (m-3)!!``; it does not
    reproduce the plane-wave integral, which needs
    ``prefactor=polynomial_prefactor``.
    """
    pre = prefactor(m) * 1j ** k
    if parity == "even":
        if n < 1:
            raise ValueError("even parity needs n >= 1")
        return ((-1) ** (n + 1) * pre * math.factorial(k + 2 * n)
                / (double_factorial(2 * n - 2) * double_factorial(2 * k + 2 * n + m)))
    if parity == "odd":
        if n < 0:
            raise ValueError("odd parity needs n >= 0")
        return ((-1) ** n * pre * math.factorial(k + 2 * n + 1)
                / (double_factorial(2 * n) * double_factorial(2 * k + 2 * n + m)))
    raise ValueError("parity must be 'even' or 'odd'")


def example2_block(P: InnerMonogenic, n: int, parity: str) -> CliffPoly:
    return block_first(P, n) if parity == "even" else block_second(P, n)


def example2_profile(k: int, n: int, parity: str) -> PowerSeries:
    return PowerSeries.power(k + 2 * n + (1 if parity == "odd" else 0))


# --- Funk-Hecke battery ----------------------------------------------------------

def funk_hecke_lhs(F, Y: CliffPoly, xi, rule: SphereRule) -> np.ndarray:
    """``int_{S^{m-1}} F(<xi, eta>) Y(eta) dS(eta)`` for a polynomial ``Y`` (all blades)."""
    t = rule.nodes
    pts = np.concatenate([np.zeros((len(t), 1)), t], axis=1)
    vals = Y.eval_array(pts)
    return np.einsum("n,n,nk->k", rule.weights, F(t @ np.asarray(xi, dtype=float)), vals)


def funk_hecke_rhs(F, Y: CliffPoly, k: int, xi) -> np.ndarray:
    m = Y.m
    xi = np.asarray(xi, dtype=float)
    y_xi = Y.eval_array(np.concatenate([[0.0], xi])[None, :])[0]
    return sphere_area(m - 1) * y_xi * funk_hecke_integral(F, k, m)
