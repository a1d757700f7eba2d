"""Axial two-sided monogenics as right derivatives of axial left monogenics, and back.

An axial left monogenic ``(M + x N / r) P`` multiplied on the right by
``d/dx0 - D`` is axial two-sided.  :func:`primitivize` inverts this on a
rectangle ``[a1, b1] x [a2, b2]`` of the ``(x0, r)`` half plane, up to a
constant multiple of ``P``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .axial import (AxialQuadruple, Profile, RadialPoly, _slots, assemble, central_diff,
                    vekua_left_residual, vekua_two_sided_residual)
from .spherical import InnerMonogenic

DEFAULT_RECT = (0.0, 1.0, 1.0, 2.0)


class VekuaViolation(ValueError):
    """Input profiles fail their Vekua system; ``residual`` is the offending size or polynomial."""

    def __init__(self, message: str, residual):
        super().__init__(message)
        self.residual = residual


class PrimitiveError(ArithmeticError):
    """Numeric primitivation missed its tolerance, or ``c`` came out non-constant."""


def _exact(c):
    if isinstance(c, float):
        return Fraction(str(c))
    return Fraction(c)


def _grid(rect, n: int = 5):
    a1, b1, a2, b2 = (float(v) for v in rect)
    x0, r = np.meshgrid(np.linspace(a1, b1, n), np.linspace(a2, b2, n), indexing="ij")
    return x0.ravel(), r.ravel()


def _max_abs(f, x0s, rs) -> float:
    return float(np.max(np.abs(f(x0s, rs)), initial=0.0))


# --- right derivative -----------------------------------------------------------

def right_derivative(M: Profile, N: Profile, P: InnerMonogenic, *, rect=DEFAULT_RECT,
                     tol: float = 1e-6, h: float = 1e-4) -> AxialQuadruple:
    """Profiles of ``[(M + x N / r) P] (d/dx0 - D)``.

    ``A = dM/dx0 - mu N / r``, ``B = (dN/dx0) / r``, ``C = -(dM/dr) / r``,
    ``D = -d(N / r)/dr / r``.  The left Vekua system is checked first: exactly
    for :class:`RadialPoly` profiles, on a grid over ``rect`` otherwise.
    """
    k, m, mu_l = P.k, P.m, P.mu
    first, second = vekua_left_residual(M, N, k, m, h)
    if isinstance(M, RadialPoly) and isinstance(N, RadialPoly):
        if first or second:
            raise VekuaViolation("(M, N) is not axial left monogenic", (first, second))
        n_r = N.div_r()
        return AxialQuadruple(M.d_x0() - n_r * mu_l, N.d_x0().div_r(), -M.d_r().div_r(),
                              -n_r.d_r().div_r(), P)
    x0s, rs = _grid(rect)
    worst = max(_max_abs(first, x0s, rs), _max_abs(second, x0s, rs))
    if worst > tol:
        raise VekuaViolation(f"left Vekua residual {worst:.3e} exceeds {tol:g}", worst)

    def A(x0, r):
        return central_diff(M, x0, r, 0, h) - mu_l * N(x0, r) / r

    def B(x0, r):
        return central_diff(N, x0, r, 0, h) / r

    def C(x0, r):
        return -central_diff(M, x0, r, 1, h) / r

    def D(x0, r):
        return -central_diff(lambda s, t: N(s, t) / t, x0, r, 1, h) / r

    return AxialQuadruple(A, B, C, D, P)


# --- primitivation ----------------------------------------------------------------

@dataclass
class Primitive:
    """Result of :func:`primitivize`; unpacks as ``M, N, c``."""

    M: Profile
    N: Profile
    c: object
    residuals: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return isinstance(self.M, RadialPoly)

    def __iter__(self):
        return iter((self.M, self.N, self.c))


def profiles_from_data(q: AxialQuadruple, a2, alpha: RadialPoly, beta: RadialPoly):
    """``M = -int_{a2}^r t B dt + alpha``, ``N = r (-int_{a2}^r t D dt + beta)``.

    ``alpha`` and ``beta`` are free functions of ``x0``; only the ODE pinned by
    :func:`primitivize` makes ``(M, N)`` left monogenic.
    """
    a2 = _exact(a2)
    M = -q.B.mul_r(1).integrate_r(a2) + alpha
    N = (-q.D.mul_r(1).integrate_r(a2) + beta).mul_r(1)
    return M, N


def _check_two_sided(q: AxialQuadruple, rect, tol: float):
    res = vekua_two_sided_residual(q)[:4]
    if q.polynomial:
        if any(res):
            raise VekuaViolation("quadruple fails the two-sided Vekua system", res)
        return
    x0s, rs = _grid(rect)
    worst = max(_max_abs(f, x0s, rs) for f in res)
    if worst > tol:
        raise VekuaViolation(f"two-sided Vekua residual {worst:.3e} exceeds {tol:g}", worst)


def _constant_difference(q: AxialQuadruple, rd: AxialQuadruple):
    """Rational ``c`` with ``assemble(q - rd) == c P``, or None."""
    diff = q - rd
    if not q.degenerate:
        if diff.B or diff.C or diff.D:
            return None
        A = diff.A
        if any(key != (0, 0) for key, _ in A.items()):
            return None
        return A.terms.get((0, 0), Fraction(0))
    F = assemble(diff)
    if F.is_zero():
        return Fraction(0)
    (key, c0), = list(q.P.poly.items())[:1]
    c = Fraction(F.terms.get(key, 0)) / c0
    return c if (F - q.P.poly.scale(c)).is_zero() else None


def _primitivize_exact(q: AxialQuadruple, rect) -> Primitive:
    a1, _, a2, _ = (_exact(v) for v in rect)
    k, m = q.k, q.m
    beta = q.B.at_r(a2).integrate_x0(a1)
    alpha = (beta * (2 * k + m) - q.D.at_r(a2) * (a2 * a2)).integrate_x0(a1)
    M, N = profiles_from_data(q, a2, alpha, beta)
    rd = right_derivative(M, N, q.P)
    c = _constant_difference(q, rd)
    if c is None:
        raise PrimitiveError("q minus the right derivative is not a constant multiple of P")
    return Primitive(M, N, c, {"left_residual": "0", "two_sided_residual": "0"})


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10, max_depth: int = 40):
    """Adaptive Simpson rule, vectorized over lanes.

    ``f(s)`` returns an array (one value per lane) for scalar ``s``; an
    interval is split while any lane misses its share of ``tol``.
    """
    def simpson(fa, fm, fb, lo, hi):
        return (hi - lo) / 6 * (fa + 4 * fm + fb)

    def rec(lo, hi, fa, fm, fb, whole, eps, depth):
        mid = (lo + hi) / 2
        lm, rm = (lo + mid) / 2, (mid + hi) / 2
        flm, frm = f(lm), f(rm)
        left = simpson(fa, flm, fm, lo, mid)
        right = simpson(fm, frm, fb, mid, hi)
        delta = left + right - whole
        if depth >= max_depth:
            raise PrimitiveError("adaptive Simpson exceeded its recursion depth")
        if np.max(np.abs(delta)) <= 15 * eps:
            return left + right + delta / 15
        return (rec(lo, mid, fa, flm, fm, left, eps / 2, depth + 1)
                + rec(mid, hi, fm, frm, fb, right, eps / 2, depth + 1))

    fa, fm, fb = f(a), f((a + b) / 2), f(b)
    return rec(a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 0)


def _radial_integral(F, a2: float, tol: float):
    """``(x0, r) -> int_{a2}^r t F(x0, t) dt`` on broadcast arrays."""
    def integral(x0, r):
        x0, r = np.broadcast_arrays(np.asarray(x0, dtype=float), np.asarray(r, dtype=float))
        width = r - a2

        def lane(s):
            t = a2 + width * s
            return width * t * F(x0, t)

        out = adaptive_simpson(lane, 0.0, 1.0, tol)
        return out if out.ndim else out[()]
    return integral


def rk4(rhs, y0, a: float, b: float, steps: int):
    """Classical RK4 on a uniform grid; returns nodes and states."""
    xs = np.linspace(a, b, steps + 1)
    hstep = (b - a) / steps
    ys = np.empty((steps + 1, len(y0)))
    ys[0] = y0
    y = np.asarray(y0, dtype=float)
    for i in range(steps):
        x = xs[i]
        k1 = rhs(x, y)
        k2 = rhs(x + hstep / 2, y + hstep / 2 * k1)
        k3 = rhs(x + hstep / 2, y + hstep / 2 * k2)
        k4 = rhs(x + hstep, y + hstep * k3)
        y = y + hstep / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        ys[i + 1] = y
    return xs, ys


def _sample_c(q: AxialQuadruple, rd: AxialQuadruple, x0s, rs) -> np.ndarray:
    """Grade-``ell`` coefficient of ``q - rd`` over that of ``P`` at sample points.

    Points are ``x = r u`` for a fixed unit ``u``; the four slots are
    homogeneous, so their values scale as ``r^(k + j)``.
    """
    m = q.m
    u = np.arange(1.0, m + 1.0)
    u /= np.linalg.norm(u)
    pt = np.concatenate([[0.0], u])[None, :]
    slots = [base.eval_array(pt)[0] for base in _slots(q.P)]
    blade = int(np.argmax(np.abs(slots[0])))
    diff = q - rd
    total = 0
    for j, (prof, base) in enumerate(zip(diff.profiles(), slots)):
        total = total + prof(x0s, rs) * rs ** j * base[blade]
    return np.real(total) / slots[0][blade].real


def _primitivize_numeric(q: AxialQuadruple, rect, tol: float, steps: int,
                         check_tol: float) -> Primitive:
    a1, b1, a2, _ = (float(v) for v in rect)
    k, m = q.k, q.m
    B, D = q.B, q.D

    # the forcing depends on x0 alone: tabulate it on the nodes and half steps
    half = np.linspace(a1, b1, 2 * steps + 1)
    table_b = dict(zip(half, np.real(B(half, np.full_like(half, a2)))))
    table_d = dict(zip(half, np.real(D(half, np.full_like(half, a2)))))

    def rhs(x0, y):
        beta, _ = y
        x0 = half[np.argmin(np.abs(half - x0))]
        return np.array([table_b[x0], (2 * k + m) * beta - a2 * a2 * table_d[x0]])

    xs, ys = rk4(rhs, [0.0, 0.0], a1, b1, steps)
    slopes = np.array([rhs(x, y) for x, y in zip(xs, ys)])
    beta = CubicHermiteSpline(xs, ys[:, 0], slopes[:, 0])
    alpha = CubicHermiteSpline(xs, ys[:, 1], slopes[:, 1])
    int_b = _radial_integral(B, a2, tol)
    int_d = _radial_integral(D, a2, tol)

    def M(x0, r):
        return -int_b(x0, r) + alpha(x0)

    def N(x0, r):
        return np.asarray(r) * (-int_d(x0, r) + beta(x0))

    rd = right_derivative(M, N, q.P, rect=rect, tol=check_tol)
    x0s, rs = _grid(rect)
    left = max(_max_abs(f, x0s, rs) for f in vekua_left_residual(M, N, k, m))
    cs = _sample_c(q, rd, x0s, rs)
    c = float(np.mean(cs))
    spread = float(np.max(np.abs(cs - c)))
    if spread > check_tol:
        raise PrimitiveError(f"c varies by {spread:.3e} over the rectangle")
    return Primitive(M, N, c, {"left_residual": left, "c_spread": spread})


def primitivize(q: AxialQuadruple, rect=DEFAULT_RECT, *, tol: float = 1e-10,
                steps: int = 2048, check_tol: float = 1e-6) -> Primitive:
    """Axial left monogenic ``(M, N)`` whose right derivative is ``q`` up to ``c P``.

    ``rect = (a1, b1, a2, b2)`` with ``a2 > 0``.  The free functions of the
    construction are pinned by ``alpha(a1) = beta(a1) = 0``.  Polynomial input
    is handled exactly and ``c`` is a Fraction; callables use adaptive Simpson
    in ``r`` and RK4 in ``x0``, with ``c`` the sample mean.
    """
    a1, b1, a2, b2 = rect
    if not (a1 < b1 and 0 < a2 < b2):
        raise ValueError("rect must satisfy a1 < b1 and 0 < a2 < b2")
    _check_two_sided(q, rect, check_tol)
    if q.polynomial:
        return _primitivize_exact(q, rect)
    return _primitivize_numeric(q, rect, tol, steps, check_tol)
