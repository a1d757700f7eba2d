"""Axial forms, their Vekua systems, and the building blocks of two-sided monogenics.

An axial function is ``A P + B x P + C P x + D x P x`` where the profiles
depend on ``(x_0, r)`` with ``r = |x|``.  In the polynomial sector profiles are
:class:`RadialPoly` objects; in the numeric sector they are vectorized callables
``f(x0, r)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .ckext import ck_extend
from .clifford import Multivector, mu
from .linalg import InconsistentSystem, rank, solve
from .mpoly import CliffPoly, cr_left, cr_right
from .spherical import InnerMonogenic, images_to_rows, two_sided_basis


class ParityError(ValueError):
    pass


class NotAxialError(ValueError):
    """Raised by :func:`extract`; ``residual`` is the input reduced modulo the axial span."""

    def __init__(self, residual: CliffPoly):
        super().__init__("polynomial is not in the axial span of the given P")
        self.residual = residual


def _frac(c):
    return Fraction(c) if isinstance(c, int) else c


class RadialPoly:
    """Exact polynomial ``sum c_ij x0^i r^j`` in the axial variables."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {(int(i), int(j)): _frac(c) for (i, j), c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "RadialPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "RadialPoly":
        return cls({(i, j): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, RadialPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "RadialPoly(0)"
        parts = [f"{c}*x0^{i}*r^{j}" for (i, j), c in sorted(self._terms.items())]
        return "RadialPoly(" + " + ".join(parts) + ")"

    def __add__(self, other):
        if not isinstance(other, RadialPoly):
            other = RadialPoly.const(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return RadialPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RadialPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RadialPoly):
            return RadialPoly({k: c * other for k, c in self._terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return RadialPoly(out)

    __rmul__ = __mul__

    def d_x0(self) -> "RadialPoly":
        return RadialPoly({(i - 1, j): c * i for (i, j), c in self._terms.items() if i})

    def d_r(self) -> "RadialPoly":
        return RadialPoly({(i, j - 1): c * j for (i, j), c in self._terms.items() if j})

    def mul_r(self, power: int = 1) -> "RadialPoly":
        """Multiply by ``r**power``; negative powers must divide exactly."""
        if power < 0 and any(j + power < 0 for _, j in self._terms):
            raise ParityError(f"r^{power} does not divide {self!r}")
        return RadialPoly({(i, j + power): c for (i, j), c in self._terms.items()})

    def div_r(self) -> "RadialPoly":
        return self.mul_r(-1)

    def at_r(self, a) -> "RadialPoly":
        """Substitute ``r = a``; result depends on x0 only."""
        out: dict = {}
        for (i, j), c in self._terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + c * _frac(a) ** j
        return RadialPoly(out)

    def at_x0(self, a) -> "RadialPoly":
        out: dict = {}
        for (i, j), c in self._terms.items():
            out[(0, j)] = out.get((0, j), 0) + c * _frac(a) ** i
        return RadialPoly(out)

    def integrate_r(self, lower) -> "RadialPoly":
        """``int_lower^r f(x0, t) dt``."""
        prim = RadialPoly({(i, j + 1): c / (j + 1) for (i, j), c in self._terms.items()})
        return prim - prim.at_r(lower)

    def integrate_x0(self, lower) -> "RadialPoly":
        prim = RadialPoly({(i + 1, j): c / (i + 1) for (i, j), c in self._terms.items()})
        return prim - prim.at_x0(lower)

    def r_parities(self) -> set[int]:
        return {j % 2 for _, j in self._terms}

    def is_even_in_r(self) -> bool:
        return self.r_parities() <= {0}

    def is_odd_in_r(self) -> bool:
        return self.r_parities() <= {1}

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def __call__(self, x0, r):
        out = 0
        for (i, j), c in self._terms.items():
            out = out + float(c) * np.asarray(x0) ** i * np.asarray(r) ** j
        return out

    def exact_value(self, x0, r):
        return sum((c * _frac(x0) ** i * _frac(r) ** j for (i, j), c in self._terms.items()),
                   Fraction(0))

    def to_cliffpoly(self, m: int) -> CliffPoly:
        """Embed as a scalar polynomial, ``r^2 -> |x|^2``; needs even r-powers."""
        if not self.is_even_in_r():
            raise ParityError("profile has odd powers of r and is not polynomial in x")
        out = CliffPoly.zero(m)
        cache: dict[int, CliffPoly] = {}
        for (i, j), c in self._terms.items():
            if j not in cache:
                cache[j] = CliffPoly.norm_sq(m, j // 2)
            out = out + CliffPoly.var(m, 0) ** i * cache[j].scale(c)
        return out


Profile = Union[RadialPoly, Callable]


@dataclass
class AxialQuadruple:
    """Profiles of ``A P + B x P + C P x + D x P x`` attached to a fixed ``P``."""

    A: Profile
    B: Profile
    C: Profile
    D: Profile
    P: InnerMonogenic = field(repr=False)

    @property
    def polynomial(self) -> bool:
        return all(isinstance(f, RadialPoly) for f in self.profiles())

    def profiles(self):
        return self.A, self.B, self.C, self.D

    @property
    def m(self):
        return self.P.m

    @property
    def k(self):
        return self.P.k

    @property
    def ell(self):
        return self.P.ell

    @property
    def degenerate(self) -> bool:
        return self.P.degenerate

    def __sub__(self, other: "AxialQuadruple") -> "AxialQuadruple":
        if self.polynomial and other.polynomial:
            diffs = [f - g for f, g in zip(self.profiles(), other.profiles())]
        else:
            diffs = [_profile_diff(f, g) for f, g in zip(self.profiles(), other.profiles())]
        return AxialQuadruple(*diffs, self.P)


def _profile_diff(f: Profile, g: Profile) -> Callable:
    return lambda x0, r: f(x0, r) - g(x0, r)


def _slots(P: InnerMonogenic) -> tuple[CliffPoly, CliffPoly, CliffPoly, CliffPoly]:
    x = CliffPoly.vector_var(P.m)
    p = P.poly
    xp = x * p
    return p, xp, p * x, xp * x


def assemble(q: AxialQuadruple):
    """Polynomial for a polynomial quadruple, otherwise an evaluator ``f(x0, x)``."""
    if q.polynomial:
        out = CliffPoly.zero(q.m)
        for prof, base in zip(q.profiles(), _slots(q.P)):
            if not prof.is_zero():
                out = out + prof.to_cliffpoly(q.m) * base
        return out
    bases = _slots(q.P)
    m = q.m

    def evaluate(x0, x) -> Multivector:
        x = np.asarray(x, dtype=float)
        r = float(np.sqrt(x @ x))
        pt = np.concatenate([[0.0], x])
        total = np.zeros(1 << m, dtype=complex)
        for prof, base in zip(q.profiles(), bases):
            val = prof(x0, r)
            if val != 0:
                total = total + val * base.eval_array(pt[None, :])[0]
        return Multivector.from_array(m, total)

    return evaluate


def _quad_unknowns(d: int, k: int):
    """Unknown monomials (slot, i, 2p) of an axial polynomial of degree <= d."""
    out = []
    for slot, extra in enumerate((0, 1, 1, 2)):
        top = d - k - extra
        for i in range(top + 1):
            for p in range((top - i) // 2 + 1):
                out.append((slot, i, 2 * p))
    return out


def _unit_quadruple(P: InnerMonogenic, slot: int, i: int, j: int) -> AxialQuadruple:
    profs = [RadialPoly() for _ in range(4)]
    profs[slot] = RadialPoly.monomial(i, j)
    return AxialQuadruple(*profs, P)


def _quad_from_solution(P, unknowns, sol) -> AxialQuadruple:
    profs = [dict() for _ in range(4)]
    for (slot, i, j), c in zip(unknowns, sol):
        if c:
            profs[slot][(i, j)] = c
    return AxialQuadruple(*(RadialPoly(t) for t in profs), P)


def _residual_image(q: AxialQuadruple) -> dict:
    out = {}
    for n, res in enumerate(vekua_two_sided_residual(q)):
        for key, c in res.items():
            out[("vekua", n, key)] = c
    return out


def extract(F: CliffPoly, P: InnerMonogenic) -> AxialQuadruple:
    """Recover polynomial profiles with ``assemble(extract(F, P)) == F``.

    When the four slots are linearly dependent (scalar or pseudoscalar ``P``),
    the representative satisfying ``C == B`` and the two-sided Vekua system is
    preferred if one exists.
    """
    if F.m != P.m:
        raise ValueError("dimension mismatch")
    if F.is_zero():
        z = RadialPoly()
        return AxialQuadruple(z, z, z, z, P)
    unknowns = _quad_unknowns(F.degree(), P.k)
    units = [_unit_quadruple(P, *u) for u in unknowns]
    images = [assemble(u) for u in units]
    rows, keys = images_to_rows(images)
    target = F.terms
    keyset = set(keys)
    extra = [key for key in target if key not in keyset]
    if extra:
        raise NotAxialError(_reduce_modulo(F, images))
    rhs = [target.get(key, 0) for key in keys]
    if rank(rows) < len(unknowns):
        con_rows, _ = images_to_rows([_residual_image(u) for u in units])
        try:
            sol = solve(rows + con_rows, rhs + [0] * len(con_rows), len(unknowns))
            return _quad_from_solution(P, unknowns, sol)
        except InconsistentSystem:
            pass
    try:
        sol = solve(rows, rhs, len(unknowns))
    except InconsistentSystem:
        raise NotAxialError(_reduce_modulo(F, images)) from None
    return _quad_from_solution(P, unknowns, sol)


def _reduce_modulo(F: CliffPoly, images: list[CliffPoly]) -> CliffPoly:
    """Normal form of ``F`` modulo the span of ``images`` (exact)."""
    keys: dict = {}
    for img in images + [F]:
        for key in img.terms:
            keys.setdefault(key, len(keys))
    span = {}
    for img in images:
        v = {keys[key]: Fraction(c) for key, c in img.items()}
        for p, row in span.items():
            if p in v:
                f = v[p] / row[p]
                for c, val in row.items():
                    v[c] = v.get(c, 0) - f * val
                    if v[c] == 0:
                        del v[c]
        if v:
            p = min(v)
            for q, row in list(span.items()):
                if p in row:
                    f = row[p] / v[p]
                    new = dict(row)
                    for c, val in v.items():
                        new[c] = new.get(c, 0) - f * val
                        if new[c] == 0:
                            del new[c]
                    span[q] = new
            span[p] = v
    t = {keys[key]: Fraction(c) for key, c in F.items()}
    for p, row in span.items():
        if p in t:
            f = t[p] / row[p]
            for c, val in row.items():
                t[c] = t.get(c, 0) - f * val
                if t[c] == 0:
                    del t[c]
    inv = {i: key for key, i in keys.items()}
    return CliffPoly(F.m, {inv[i]: c for i, c in t.items()})


# --- Vekua systems -----------------------------------------------------------

def central_diff(f: Callable, x0, r, wrt: int, h: float = 1e-4):
    """Central difference in x0 (``wrt=0``) or r (``wrt=1``), one Richardson step."""
    def d(step):
        if wrt == 0:
            return (f(x0 + step, r) - f(x0 - step, r)) / (2 * step)
        return (f(x0, r + step) - f(x0, r - step)) / (2 * step)
    return (4 * d(h / 2) - d(h)) / 3


def vekua_left_residual(M: Profile, N: Profile, k: int, m: int, h: float = 1e-4):
    """Residuals of the axial left-monogenic (Vekua) system for ``(M + x N / r) P_k``.

    Polynomial profiles give exact :class:`RadialPoly` residuals; callables
    give residual functions of ``(x0, r)`` built from central differences.
    """
    c = 2 * k + m - 1
    if isinstance(M, RadialPoly) and isinstance(N, RadialPoly):
        return (M.d_x0() - N.d_r() - N.div_r() * c, M.d_r() + N.d_x0())

    def first(x0, r):
        if np.any(np.asarray(r) == 0):
            raise ValueError("numeric Vekua residual undefined at r = 0")
        return (central_diff(M, x0, r, 0, h) - central_diff(N, x0, r, 1, h)
                - c * N(x0, r) / r)

    def second(x0, r):
        return central_diff(M, x0, r, 1, h) + central_diff(N, x0, r, 0, h)

    return first, second


def vekua_two_sided_residual(q: AxialQuadruple, h: float = 1e-4):
    """Residuals of the four two-sided Vekua equations plus ``C - B``."""
    k, m, mu_l = q.k, q.m, q.P.mu
    A, B, C, D = q.profiles()
    if q.polynomial:
        return (
            A.d_x0() - B.d_r().mul_r(1) - B * (2 * k + m - mu_l),
            B.d_x0() + A.d_r().div_r() - D * mu_l,
            B.d_x0() - D.d_r().mul_r(1) - D * (2 * k + m + 2),
            D.d_x0() + B.d_r().div_r(),
            C - B,
        )

    def dd(f, wrt):
        return lambda x0, r: central_diff(f, x0, r, wrt, h)

    def guard(r):
        if np.any(np.asarray(r) == 0):
            raise ValueError("numeric Vekua residual undefined at r = 0")

    def r1(x0, r):
        return dd(A, 0)(x0, r) - r * dd(B, 1)(x0, r) - (2 * k + m - mu_l) * B(x0, r)

    def r2(x0, r):
        guard(r)
        return dd(B, 0)(x0, r) + dd(A, 1)(x0, r) / r - mu_l * D(x0, r)

    def r3(x0, r):
        return dd(B, 0)(x0, r) - r * dd(D, 1)(x0, r) - (2 * k + m + 2) * D(x0, r)

    def r4(x0, r):
        guard(r)
        return dd(D, 0)(x0, r) + dd(B, 1)(x0, r) / r

    def r5(x0, r):
        return C(x0, r) - B(x0, r)

    return r1, r2, r3, r4, r5


# --- building blocks ----------------------------------------------------------

def alpha(n: int, ell: int, k: int, m: int) -> Fraction:
    """Coefficient of ``|x|^(2n) P`` in the first block family."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return -Fraction(2 * k + 2 * n + m - mu(ell, m), 2 * n)


def lam(n: int, ell: int, k: int, m: int) -> Fraction:
    """Even-n coefficient in the decomposition of a degree-k two-sided monogenic."""
    return -Fraction(2 * k + m - n - mu(ell, m), n)


def block_first_data(P: InnerMonogenic, n: int) -> CliffPoly:
    """Initial data ``alpha |x|^(2n) P + |x|^(2n-2) x P x``."""
    if n < 1:
        raise ValueError("first family needs n >= 1 (n = 0 is P itself)")
    m = P.m
    x = CliffPoly.vector_var(m)
    a = alpha(n, P.ell, P.k, m)
    return (CliffPoly.norm_sq(m, n) * P.poly).scale(a) + CliffPoly.norm_sq(m, n - 1) * (x * P.poly * x)


def block_second_data(P: InnerMonogenic, n: int) -> CliffPoly:
    """Initial data ``|x|^(2n) (x P + P x)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = CliffPoly.vector_var(P.m)
    return CliffPoly.norm_sq(P.m, n) * (x * P.poly + P.poly * x)


def block_first(P: InnerMonogenic, n: int) -> CliffPoly:
    """CK extension of the first block family; two-sided monogenic and axial."""
    return ck_extend(block_first_data(P, n))


def block_second(P: InnerMonogenic, n: int) -> CliffPoly:
    """CK extension of the second block family; two-sided monogenic and axial."""
    return ck_extend(block_second_data(P, n))


def block(family: int, P: InnerMonogenic, n: int) -> CliffPoly:
    if family == 1:
        return block_first(P, n)
    if family == 2:
        return block_second(P, n)
    raise ValueError("family must be 1 or 2")


# --- decomposition of two-sided monogenics ------------------------------------

def _term_data(m: int, k: int, n: int, S: CliffPoly, ell: int | None) -> CliffPoly:
    """Initial data of the n-th term, for a grade-pure (even n) or any S."""
    x = CliffPoly.vector_var(m)
    if n == 0:
        return S
    if n % 2:
        return CliffPoly.norm_sq(m, (n - 1) // 2) * (x * S + S * x)
    return ((CliffPoly.norm_sq(m, n // 2) * S).scale(lam(n, ell, k, m))
            + CliffPoly.norm_sq(m, n // 2 - 1) * (x * S * x))


def reconstruct(S: list[CliffPoly], m: int) -> CliffPoly:
    """Inverse of :func:`decompose_two_sided`: ``S[j]`` has degree ``j``."""
    k = len(S) - 1
    out = CliffPoly.zero(m)
    for n in range(k + 1):
        s = S[k - n]
        if s.is_zero():
            continue
        if n == 0:
            out = out + s
        elif n % 2:
            out = out + ck_extend(_term_data(m, k, n, s, None))
        else:
            for ell in sorted(s.grades()):
                out = out + ck_extend(_term_data(m, k, n, s.grade_project(ell), ell))
    return out


@dataclass
class Decomposition:
    m: int
    k: int
    S: list[CliffPoly]
    residual: CliffPoly

    @property
    def exact(self) -> bool:
        return self.residual.is_zero()


def decompose_two_sided(M: CliffPoly) -> Decomposition:
    """Write a homogeneous two-sided monogenic as CK extensions of axial data.

    Returns ``S[0..k]`` with ``S[j]`` two-sided monogenic of degree ``j`` in
    x_1..x_m; the solve happens at ``x_0 = 0``, and the reconstruction is
    checked against ``M`` exactly.
    """
    m = M.m
    if not (cr_left(M).is_zero() and cr_right(M).is_zero()):
        raise ValueError("input is not two-sided monogenic")
    if not M.is_homogeneous():
        raise ValueError("input must be homogeneous")
    k = max(M.degree(), 0)
    g = M.substitute_x0(0)
    columns = []
    images = []
    for n in range(k + 1):
        for t in two_sided_basis(m, k - n):
            columns.append((k - n, t.poly))
            images.append(_term_data(m, k, n, t.poly, t.ell))
    rows, keys = images_to_rows(images)
    target = g.terms
    keyset = set(keys)
    for key in target:
        if key not in keyset:
            rows.append({})
            keys.append(key)
    sol = solve(rows, [target.get(key, 0) for key in keys], len(columns))
    S = [CliffPoly.zero(m) for _ in range(k + 1)]
    for (deg, t), c in zip(columns, sol):
        if c:
            S[deg] = S[deg] + t.scale(c)
    return Decomposition(m, k, S, M - reconstruct(S, m))
