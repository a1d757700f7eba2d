"""Polynomials in x_0, x_1, ..., x_m with Clifford-algebra coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .clifford import DimensionError, Multivector, blade_indices, blade_product, grade

Exp = tuple[int, ...]


def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple(i + j for i, j in zip(a, b))


class CliffPoly:
    """Immutable polynomial with multivector coefficients.

    Stored flat: ``(exponent vector, blade) -> coefficient``, where the
    exponent vector has length ``m + 1`` and entry 0 belongs to ``x_0``.
    """

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[tuple[Exp, int], object] | None = None):
        self.m = m
        clean = {}
        if terms:
            for (exp, blade), c in terms.items():
                if c != 0:
                    if len(exp) != m + 1:
                        raise DimensionError(f"exponent {exp} has wrong length for m={m}")
                    clean[(tuple(exp), blade)] = c
        self._terms = clean

    # constructors
    @classmethod
    def zero(cls, m: int) -> "CliffPoly":
        return cls(m)

    @classmethod
    def constant(cls, value: Multivector | object, m: int | None = None) -> "CliffPoly":
        if isinstance(value, Multivector):
            m = value.m
            z = (0,) * (m + 1)
            return cls(m, {(z, b): c for b, c in value.items()})
        return cls(m, {((0,) * (m + 1), 0): value})

    @classmethod
    def monomial(cls, m: int, exp: Iterable[int], coef: Multivector | object = 1) -> "CliffPoly":
        exp = tuple(exp)
        if isinstance(coef, Multivector):
            return cls(m, {(exp, b): c for b, c in coef.items()})
        return cls(m, {(exp, 0): coef})

    @classmethod
    def var(cls, m: int, j: int) -> "CliffPoly":
        """The scalar coordinate ``x_j`` (``j = 0`` is the axial variable)."""
        exp = [0] * (m + 1)
        exp[j] = 1
        return cls(m, {(tuple(exp), 0): 1})

    @classmethod
    def vector_var(cls, m: int) -> "CliffPoly":
        """``x = sum_j x_j e_j``, the Clifford vector variable in R^m."""
        terms = {}
        for j in range(1, m + 1):
            exp = [0] * (m + 1)
            exp[j] = 1
            terms[(tuple(exp), 1 << (j - 1))] = 1
        return cls(m, terms)

    @classmethod
    def norm_sq(cls, m: int, power: int = 1) -> "CliffPoly":
        """``|x|^(2*power)`` in the variables x_1..x_m."""
        base = cls(m, {(tuple(2 if i == j else 0 for i in range(m + 1)), 0): 1
                       for j in range(1, m + 1)})
        out = cls.constant(1, m)
        for _ in range(power):
            out = out * base
        return out

    # inspection
    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict[tuple[Exp, int], object]:
        return dict(self._terms)

    def coefficients(self) -> dict[Exp, Multivector]:
        grouped: dict[Exp, dict[int, object]] = {}
        for (exp, b), c in self._terms.items():
            grouped.setdefault(exp, {})[b] = c
        return {e: Multivector(self.m, t) for e, t in sorted(grouped.items())}

    def coeff(self, exp: Iterable[int]) -> Multivector:
        exp = tuple(exp)
        return Multivector(self.m, {b: c for (e, b), c in self._terms.items() if e == exp})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e, _ in self._terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self._terms}

    def is_homogeneous(self, k: int | None = None) -> bool:
        d = self.degrees()
        if not d:
            return True
        return len(d) == 1 and (k is None or d == {k})

    def has_x0(self) -> bool:
        return any(e[0] for e, _ in self._terms)

    def grades(self) -> set[int]:
        return {grade(b) for _, b in self._terms}

    # algebra
    def _check(self, other: "CliffPoly") -> None:
        if self.m != other.m:
            raise DimensionError(f"dimension mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        if not isinstance(other, CliffPoly):
            other = CliffPoly.constant(other, self.m) if not isinstance(other, Multivector) \
                else CliffPoly.constant(other)
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return CliffPoly(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffPoly(self.m, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "CliffPoly":
        if s == 0:
            return CliffPoly(self.m)
        return CliffPoly(self.m, {k: c * s for k, c in self._terms.items()})

    def __truediv__(self, s):
        if isinstance(s, int):
            s = Fraction(s)
        return CliffPoly(self.m, {k: c / s for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            other = CliffPoly.constant(other)
        elif not isinstance(other, CliffPoly):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[Exp, int], object] = {}
        for (ea, ba), ca in self._terms.items():
            for (eb, bb), cb in other._terms.items():
                s, blade = blade_product(ba, bb)
                key = (_add_exp(ea, eb), blade)
                v = ca * cb
                out[key] = out.get(key, 0) + (v if s > 0 else -v)
        return CliffPoly(self.m, out)

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return CliffPoly.constant(other) * self
        return self.scale(other)

    def __pow__(self, n: int):
        out = CliffPoly.constant(1, self.m)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CliffPoly):
            return self.m == other.m and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.m, frozenset(self._terms.items())))

    def __repr__(self):
        return f"CliffPoly(m={self.m}, {to_latex(self)})"

    def map_coefficients(self, f) -> "CliffPoly":
        return CliffPoly(self.m, {k: f(c) for k, c in self._terms.items()})

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    # projections and evaluation
    def grade_project(self, ell: int) -> "CliffPoly":
        return CliffPoly(self.m, {k: c for k, c in self._terms.items() if grade(k[1]) == ell})

    def homogeneous_part(self, k: int) -> "CliffPoly":
        if k < 0:
            raise ValueError("degree must be non-negative")
        return CliffPoly(self.m, {key: c for key, c in self._terms.items() if sum(key[0]) == k})

    def substitute_x0(self, value=0) -> "CliffPoly":
        """Set ``x_0 = value``; the result has no x_0 dependence."""
        out: dict[tuple[Exp, int], object] = {}
        for (e, b), c in self._terms.items():
            key = ((0,) + e[1:], b)
            v = c * value ** e[0] if e[0] else c
            out[key] = out.get(key, 0) + v
        return CliffPoly(self.m, out)

    def __call__(self, *point) -> Multivector:
        return evaluate(self, point[0] if len(point) == 1 else point)

    def eval_array(self, points) -> np.ndarray:
        """Evaluate at an ``(N, m+1)`` array of points; returns ``(N, 2**m)``."""
        pts = np.atleast_2d(np.asarray(points))
        out = np.zeros((pts.shape[0], 1 << self.m), dtype=np.result_type(pts, float))
        powers: dict[tuple[int, int], np.ndarray] = {}
        for (e, b), c in self._terms.items():
            val = np.full(pts.shape[0], float(c) if not isinstance(c, complex) else c)
            for j, p in enumerate(e):
                if p:
                    key = (j, p)
                    if key not in powers:
                        powers[key] = pts[:, j] ** p
                    val = val * powers[key]
            if np.iscomplexobj(val) and not np.iscomplexobj(out):
                out = out.astype(complex)
            out[:, b] += val
        return out


def evaluate(p: CliffPoly, point) -> Multivector:
    """Direct term-by-term evaluation; exact when the point is rational."""
    point = tuple(point)
    if len(point) != p.m + 1:
        raise ValueError(f"point needs {p.m + 1} coordinates, got {len(point)}")
    out: dict[int, object] = {}
    for (e, b), c in p.items():
        v = c
        for x, k in zip(point, e):
            if k:
                v = v * x ** k
        out[b] = out.get(b, 0) + v
    return Multivector(p.m, out)


def partial(p: CliffPoly, j: int) -> CliffPoly:
    out: dict[tuple[Exp, int], object] = {}
    for (e, b), c in p.items():
        k = e[j]
        if k:
            ne = e[:j] + (k - 1,) + e[j + 1:]
            out[(ne, b)] = out.get((ne, b), 0) + c * k
    return CliffPoly(p.m, out)


def _dirac(p: CliffPoly, left: bool) -> CliffPoly:
    out: dict[tuple[Exp, int], object] = {}
    for (e, b), c in p.items():
        for j in range(1, p.m + 1):
            k = e[j]
            if not k:
                continue
            ej = 1 << (j - 1)
            s, blade = blade_product(ej, b) if left else blade_product(b, ej)
            key = (e[:j] + (k - 1,) + e[j + 1:], blade)
            v = c * k
            out[key] = out.get(key, 0) + (v if s > 0 else -v)
    return CliffPoly(p.m, out)


def dirac_left(p: CliffPoly) -> CliffPoly:
    """``sum_j e_j d/dx_j p``."""
    return _dirac(p, True)


def dirac_right(p: CliffPoly) -> CliffPoly:
    """``sum_j (d/dx_j p) e_j``."""
    return _dirac(p, False)


def cr_left(p: CliffPoly) -> CliffPoly:
    """Generalized Cauchy-Riemann operator ``(d/dx_0 + D) p``."""
    return partial(p, 0) + dirac_left(p)


def cr_right(p: CliffPoly) -> CliffPoly:
    return partial(p, 0) + dirac_right(p)


def cr_bar_left(p: CliffPoly) -> CliffPoly:
    """Conjugate operator ``(d/dx_0 - D) p``."""
    return partial(p, 0) - dirac_left(p)


def cr_bar_right(p: CliffPoly) -> CliffPoly:
    return partial(p, 0) - dirac_right(p)


def laplacian(p: CliffPoly, include_x0: bool = True) -> CliffPoly:
    out = CliffPoly.zero(p.m)
    for j in range(0 if include_x0 else 1, p.m + 1):
        out = out + partial(partial(p, j), j)
    return out


def euler(p: CliffPoly, include_x0: bool = False) -> CliffPoly:
    """``sum_j x_j d/dx_j p``; scales a degree-k homogeneous part by k."""
    out: dict[tuple[Exp, int], object] = {}
    start = 0 if include_x0 else 1
    for (e, b), c in p.items():
        k = sum(e[start:])
        if k:
            out[(e, b)] = c * k
    return CliffPoly(p.m, out)


def homogeneous_part(p: CliffPoly, k: int) -> CliffPoly:
    return p.homogeneous_part(k)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of ``nvars`` variables with the given total degree,
    in descending lexicographic order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _blade_latex(b: int) -> str:
    return "e_{" + "".join(str(j) for j in blade_indices(b)) + "}" if b else ""


def to_latex(p: CliffPoly) -> str:
    """Render as ``c x_0^{a} x_1^{b} ... e_{12}`` terms, for documentation."""
    if p.is_zero():
        return "0"
    parts = []
    for (e, b), c in sorted(p.items(), key=lambda kv: (-sum(kv[0][0]), kv[0][0], kv[0][1])):
        factors = []
        for j, k in enumerate(e):
            if k == 1:
                factors.append(f"x_{j}")
            elif k:
                factors.append(f"x_{j}^{{{k}}}")
        if isinstance(c, Fraction) and c.denominator != 1:
            cs = rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
        else:
            cs = str(c)
        body = " ".join(factors + ([_blade_latex(b)] if b else []))
        if not body:
            parts.append(cs)
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{cs} {body}")
    return " + ".join(parts).replace("+ -", "- ")
