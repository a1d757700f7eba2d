"""Gegenbauer polynomials, half-integer Gamma values, Bessel J and weighted quadrature."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi


class ConvergenceError(RuntimeError):
    pass


def gegenbauer(k: int, nu, t):
    """``C_k^nu(t)`` by the three-term recurrence.

    Exact when ``nu`` and ``t`` are Fractions; works elementwise on arrays.
    """
    if k < 0:
        raise ValueError("degree must be non-negative")
    c_prev = t * 0 + 1
    if k == 0:
        return c_prev
    c = 2 * nu * t
    for n in range(2, k + 1):
        c_prev, c = c, (2 * t * (n + nu - 1) * c - (n + 2 * nu - 2) * c_prev) / n
    return c


def gegenbauer_at_one(k: int, nu):
    """``C_k^nu(1) = Gamma(2nu + k) / (k! Gamma(2nu))`` as a rising factorial."""
    out = Fraction(1) if isinstance(nu, (int, Fraction)) else 1.0
    for j in range(k):
        out = out * (2 * nu + j) / (j + 1)
    return out


def chebyshev_t(k: int, t):
    c_prev = t * 0 + 1
    if k == 0:
        return c_prev
    c = t
    for _ in range(2, k + 1):
        c_prev, c = c, 2 * t * c - c_prev
    return c


def gegenbauer_normalized(k: int, nu, t):
    """``C_k^nu(t) / C_k^nu(1)``; at ``nu = 0`` this is the Chebyshev limit ``T_k``."""
    if nu == 0:
        return chebyshev_t(k, t)
    return gegenbauer(k, nu, t) / float(gegenbauer_at_one(k, nu))


def double_factorial(n: int) -> int:
    """``n!!`` with ``0!! = (-1)!! = 1``."""
    if n < -1:
        raise ValueError("double factorial defined for n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def gamma_half(n: int) -> float:
    """``Gamma(n / 2)`` for positive integer ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2:
        return math.sqrt(math.pi) * double_factorial(n - 2) / 2 ** ((n - 1) / 2)
    return float(math.factorial(n // 2 - 1))


def _rgamma(z: float) -> float:
    if z <= 0 and z == int(z):
        return 0.0
    return 1.0 / math.gamma(z)


def bessel_j(nu: float, r, tol: float = 1e-16, max_terms: int = 500):
    """Bessel function of the first kind by its ascending series.

    The series alternates with eventually decreasing terms, so once the terms
    shrink the tail is bounded by the first omitted term; summation stops when
    that bound falls below ``tol`` relative to the partial sum.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise ValueError("r must be non-negative")
    if nu < 0 and nu == int(nu):
        n = -int(nu)
        return (-1) ** n * bessel_j(float(n), r, tol, max_terms)
    half = r_arr / 2
    with np.errstate(divide="ignore"):
        term = np.where(half > 0, half ** nu, 1.0 if nu == 0 else 0.0) * _rgamma(nu + 1)
    if nu < 0 and np.any(r_arr == 0):
        raise ValueError("J_nu(0) is unbounded for negative non-integer order")
    total = term.copy()
    q = half * half
    for s in range(max_terms):
        term = -term * q / ((s + 1) * (s + nu + 1))
        total = total + term
        shrinking = (s + 1) * abs(s + nu + 2) > np.max(q, initial=0.0)
        if shrinking and np.all(np.abs(term) <= tol * np.maximum(np.abs(total), 1e-300)):
            break
    else:
        raise ConvergenceError(f"Bessel series did not converge in {max_terms} terms")
    return total if np.ndim(r) else float(total)


@lru_cache(maxsize=None)
def jacobi_rule(n: int, nu: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss nodes/weights for the weight ``(1 - t^2)^(nu - 1/2)`` on [-1, 1]."""
    a = nu - 0.5
    t, w = roots_jacobi(n, a, a)
    return t, w


@dataclass
class QuadResult:
    value: complex
    nodes: int
    change: float


def weighted_integral(F, nu: float, tol: float = 1e-10, start: int = 16,
                      max_nodes: int = 4096) -> QuadResult:
    """``int_{-1}^{1} F(t) (1 - t^2)^(nu - 1/2) dt`` by Gauss-Jacobi quadrature.

    The node count doubles until two successive estimates agree to ``tol``
    relative to the integral, or to rounding level relative to ``int |F| w``.
    Complex ``F`` is handled by numpy's complex arithmetic.
    """
    n = start
    t, w = jacobi_rule(n, nu)
    prev = np.sum(w * F(t))
    while n < max_nodes:
        n *= 2
        t, w = jacobi_rule(n, nu)
        vals = F(t)
        cur = np.sum(w * vals)
        change = abs(cur - prev)
        scale = np.sum(w * np.abs(vals))
        if change <= max(tol * abs(cur), 64 * np.finfo(float).eps * scale):
            return QuadResult(complex(cur) if np.iscomplexobj(cur) else float(cur), n, float(change))
        prev = cur
    raise ConvergenceError(f"weighted integral did not settle with {max_nodes} nodes")


def gegenbauer_weighted_integral(F, k: int, nu: float, tol: float = 1e-10):
    """``int_{-1}^{1} F(t) C_k^nu(t) (1 - t^2)^(nu - 1/2) dt``."""
    return weighted_integral(lambda t: F(t) * gegenbauer(k, nu, t), nu, tol).value


def funk_hecke_integral(F, k: int, m: int, tol: float = 1e-10):
    """``C_k(1)^{-1} int F(t) C_k(t) (1 - t^2)^((m-3)/2) dt`` with ``nu = (m-2)/2``.

    For ``m = 2`` the normalized polynomial is the Chebyshev limit.
    """
    nu = (m - 2) / 2
    return weighted_integral(lambda t: F(t) * gegenbauer_normalized(k, nu, t), nu, tol).value


def sphere_area(m: int) -> float:
    """Surface area of the unit sphere S^{m-1} in R^m."""
    return 2 * math.pi ** (m / 2) / math.gamma(m / 2)


def exp_identity_rhs(a: float, k: int, nu: float) -> complex:
    """Closed form of ``int e^{iat} C_k^nu(t) (1 - t^2)^(nu - 1/2) dt``."""
    return (math.pi * 2 ** (1 - nu) * 1j ** k * math.gamma(2 * nu + k)
            / (math.factorial(k) * math.gamma(nu)) * a ** (-nu) * bessel_j(k + nu, a))


def power_identity_rhs(k: int, rho: int, nu: float) -> float:
    """Closed form of ``int_0^1 t^(k + 2 rho) C_k^nu(t) (1 - t^2)^(nu - 1/2) dt``."""
    g = math.gamma
    return (g(2 * nu + k) * g(2 * rho + k + 1) * g(nu + 0.5) * g(rho + 0.5)
            / (2 ** (k + 1) * g(2 * nu) * g(2 * rho + 1) * math.factorial(k) * g(k + nu + rho + 1)))


def selftest() -> list[dict]:
    """Run the three identity batteries; one row per battery with its max error."""
    rows = []
    err = 0.0
    for nu in (0.5, 1.0, 1.5):
        for k in range(7):
            t = np.array([1.0])
            lhs = float(gegenbauer(k, nu, t)[0])
            rhs = math.gamma(2 * nu + k) / (math.factorial(k) * math.gamma(2 * nu))
            err = max(err, abs(lhs - rhs) / abs(rhs))
    rows.append({"identity": "gegenbauer_at_one", "max_rel_err": err, "tol": 1e-8})

    rng = np.random.default_rng(0)
    err = 0.0
    for _ in range(20):
        nu = float(rng.uniform(0.5, 6.0))
        r = float(rng.uniform(0.2, 8.0))
        lhs = 2 * nu / r * bessel_j(nu, r)
        rhs = bessel_j(nu - 1, r) + bessel_j(nu + 1, r)
        err = max(err, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    rows.append({"identity": "bessel_recurrence", "max_rel_err": err, "tol": 1e-8})

    err = 0.0
    nu = 0.5
    for a in (1.0, 2.5):
        for k in range(4):
            lhs = gegenbauer_weighted_integral(lambda t: np.exp(1j * a * t), k, nu)
            rhs = exp_identity_rhs(a, k, nu)
            err = max(err, abs(lhs - rhs) / abs(rhs))
    rows.append({"identity": "exp_gegenbauer_integral", "max_rel_err": err, "tol": 1e-8})

    err = 0.0
    for nu in (0.5, 1.0, 1.5):
        for k in range(4):
            for rho in range(3):
                # integrand is even, so the half-line integral is half the full one
                lhs = 0.5 * gegenbauer_weighted_integral(lambda t: t ** (k + 2 * rho), k, nu)
                rhs = power_identity_rhs(k, rho, nu)
                err = max(err, abs(lhs - rhs) / abs(rhs))
    rows.append({"identity": "power_gegenbauer_integral", "max_rel_err": err, "tol": 1e-8})
    for row in rows:
        row["passed"] = row["max_rel_err"] < row["tol"]
    return rows
