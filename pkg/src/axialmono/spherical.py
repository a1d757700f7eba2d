"""Inner spherical monogenics, Fischer decompositions and grade-wise tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .clifford import Multivector, blades_of_grade, mu
from .linalg import nullspace, rank, solve
from .mpoly import CliffPoly, dirac_left, dirac_right, laplacian, monomials


@dataclass(frozen=True)
class InnerMonogenic:
    """Grade-``ell`` valued, degree-``k`` homogeneous left monogenic polynomial."""

    m: int
    k: int
    ell: int
    poly: CliffPoly = field(compare=False)

    def __post_init__(self):
        p = self.poly
        if not p.is_homogeneous(self.k) or p.has_x0():
            raise ValueError("inner monogenic must be homogeneous in x_1..x_m")
        if p.grades() - {self.ell}:
            raise ValueError(f"coefficients must be pure grade {self.ell}")
        if not dirac_left(p).is_zero():
            raise ValueError("polynomial is not left monogenic")

    @property
    def degenerate(self) -> bool:
        """Scalar or pseudoscalar valued; axial families partly collapse here."""
        return self.ell in (0, self.m)

    @property
    def mu(self) -> int:
        return mu(self.ell, self.m)


def _x_poly(m: int, exp_tail) -> tuple:
    return (0,) + tuple(exp_tail)


def images_to_rows(images) -> tuple[list[dict[int, object]], list]:
    """Matrix of a linear map given the images of its domain basis vectors.

    Returns one sparse row per output term key, plus the list of keys.
    """
    rows: dict[object, dict[int, object]] = {}
    for col, img in enumerate(images):
        for key, c in img.items():
            rows.setdefault(key, {})[col] = c
    keys = list(rows)
    return [rows[k] for k in keys], keys


def combine(basis: list[CliffPoly], coeffs, m: int) -> CliffPoly:
    out = CliffPoly.zero(m)
    for b, c in zip(basis, coeffs):
        if c:
            out = out + b.scale(c)
    return out


def homogeneous_unit_basis(m: int, k: int, blades=None) -> list[CliffPoly]:
    """Monomial-times-blade basis of degree-``k`` polynomials in x_1..x_m."""
    if k < 0:
        return []
    if blades is None:
        blades = range(1 << m)
    return [CliffPoly(m, {(_x_poly(m, e), b): 1}) for e in monomials(m, k) for b in blades]


@lru_cache(maxsize=None)
def _inner_basis_polys(m: int, k: int, ell: int) -> tuple[CliffPoly, ...]:
    domain = homogeneous_unit_basis(m, k, blades_of_grade(m, ell))
    rows, _ = images_to_rows([dirac_left(u) for u in domain])
    kernel = nullspace(rows, len(domain))
    polys = []
    for v in kernel:
        terms = {}
        for col, c in v.items():
            (key, one), = domain[col].items()
            terms[key] = c
        polys.append(CliffPoly(m, terms))
    return tuple(polys)


def inner_monogenic_basis(m: int, k: int, ell: int) -> list[InnerMonogenic]:
    """Rational basis of grade-``ell`` valued left monogenic polynomials of degree ``k``.

    Computed as the exact nullspace of the Dirac operator on the coefficient
    space; an empty list means the space is trivial.
    """
    if not 0 <= ell <= m:
        raise ValueError(f"grade {ell} outside 0..{m}")
    if k < 0:
        raise ValueError("degree must be non-negative")
    return [InnerMonogenic(m, k, ell, p) for p in _inner_basis_polys(m, k, ell)]


def two_sided_basis(m: int, k: int) -> list[InnerMonogenic]:
    """Basis of homogeneous degree-``k`` two-sided monogenics in R^m, grade by grade."""
    out = []
    for ell in range(m + 1):
        out.extend(inner_monogenic_basis(m, k, ell))
    return out


def _require_homogeneous(p: CliffPoly) -> int:
    if p.has_x0():
        raise ValueError("expected a polynomial in x_1..x_m only")
    if not p.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")
    return max(p.degree(), 0)


def fischer_harmonic(p: CliffPoly) -> tuple[CliffPoly, CliffPoly]:
    """Unique split ``p = H + |x|^2 Q`` with ``H`` harmonic in x_1..x_m."""
    k = _require_homogeneous(p)
    m = p.m
    if k < 2 or p.is_zero():
        return p, CliffPoly.zero(m)
    blades = sorted({b for (_, b) in p.terms})
    domain = homogeneous_unit_basis(m, k - 2, blades)
    r2 = CliffPoly.norm_sq(m)
    rows, keys = images_to_rows([laplacian(r2 * u, include_x0=False) for u in domain])
    target = laplacian(p, include_x0=False)
    keyset = set(keys)
    extra = [key for key, _ in target.items() if key not in keyset]
    rows += [{} for _ in extra]
    keys += extra
    tt = target.terms
    q = combine(domain, solve(rows, [tt.get(key, 0) for key in keys], len(domain)), m)
    return p - r2 * q, q


def fischer_monogenic(p: CliffPoly) -> tuple[CliffPoly, CliffPoly, CliffPoly]:
    """A split ``p = M + x U + V x`` with ``M`` two-sided monogenic.

    The split is not unique; the returned representative is the basic solution
    of the exact linear system with columns ordered U before V, so the pivots
    sit on the earliest columns and the remaining unknowns are zero.
    """
    k = _require_homogeneous(p)
    m = p.m
    zero = CliffPoly.zero(m)
    if k == 0 or p.is_zero():
        return p, zero, zero
    x = CliffPoly.vector_var(m)
    units = homogeneous_unit_basis(m, k - 1)
    domain = [x * u for u in units] + [u * x for u in units]

    def tagged(q: CliffPoly) -> CliffPoly:
        # stack left and right Dirac images into one polynomial via a tag bit
        left = dirac_left(q).terms
        right = dirac_right(q).terms
        out = {(e + (0,), b): c for (e, b), c in left.items()}
        out.update({(e + (1,), b): c for (e, b), c in right.items()})
        return out

    images = [tagged(d) for d in domain]
    rows, keys = images_to_rows(images)
    target = tagged(p)
    keyset = set(keys)
    for key in target:
        if key not in keyset:
            rows.append({})
            keys.append(key)
    sol = solve(rows, [target.get(key, 0) for key in keys], len(domain))
    n = len(units)
    u = combine(units, sol[:n], m)
    v = combine(units, sol[n:], m)
    mk = p - x * u - v * x
    return mk, u, v


@dataclass
class TwoSidedReport:
    left_monogenic: bool
    right_monogenic: bool
    grade_monogenic: dict[int, bool]

    @property
    def two_sided(self) -> bool:
        return self.left_monogenic and self.right_monogenic

    @property
    def all_grades_monogenic(self) -> bool:
        return all(self.grade_monogenic.values())

    @property
    def verdicts_agree(self) -> bool:
        return self.two_sided == self.all_grades_monogenic


def two_sided_check(f: CliffPoly) -> TwoSidedReport:
    """Compare two-sidedness of ``f`` against left monogenicity of each grade part."""
    if f.has_x0():
        raise ValueError("expected a polynomial in x_1..x_m only")
    per_grade = {ell: dirac_left(f.grade_project(ell)).is_zero() for ell in range(f.m + 1)}
    return TwoSidedReport(dirac_left(f).is_zero(), dirac_right(f).is_zero(), per_grade)


@dataclass
class RelationKernel:
    m: int
    k: int
    kernel: list[tuple[list[CliffPoly], list[CliffPoly]]]
    expected: list[tuple[list[CliffPoly], list[CliffPoly]]]
    matches: bool

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def _relation_terms(m: int, k: int) -> list[tuple[str, int, CliffPoly, object]]:
    """Unknown slots of the relation: (name, degree, basis poly, image)."""
    x = CliffPoly.vector_var(m)
    slots = []
    for j in range(k + 1):
        deg = k - j
        for t in two_sided_basis(m, deg):
            s = t.poly
            if j % 2 == 0:
                img_r = CliffPoly.norm_sq(m, j // 2) * s
                img_s = CliffPoly.norm_sq(m, j // 2 - 1) * (x * s * x) if j >= 2 else None
            else:
                w = CliffPoly.norm_sq(m, (j - 1) // 2)
                img_r = w * (x * s)
                img_s = w * (s * x)
            slots.append(("R", deg, s, img_r))
            if deg < k:
                slots.append(("S", deg, s, img_s))
    return slots


def lemfund_kernel(m: int, k: int) -> RelationKernel:
    """Kernel of ``(R_n, S_n) -> sum |x|^j R + |x|^(j-2) x S x + |x|^(j-1)(x R + S x)``.

    The unknowns range over two-sided monogenic R_n (n <= k) and S_n (n < k).
    The kernel is compared against the span of the two relations
    ``R_0 = (-1)^k S_0`` (scalars) and ``R_0 = (-1)^(m+k-1) S_0`` (pseudoscalars).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    slots = _relation_terms(m, k)
    rows, _ = images_to_rows([s[3] for s in slots])
    kern = nullspace(rows, len(slots))

    def unpack(vec: dict[int, Fraction]):
        R = [CliffPoly.zero(m) for _ in range(k + 1)]
        S = [CliffPoly.zero(m) for _ in range(k + 1)]
        for col, c in vec.items():
            name, deg, s, _ = slots[col]
            if name == "R":
                R[deg] = R[deg] + s.scale(c)
            else:
                S[deg] = S[deg] + s.scale(c)
        return R, S

    kernel = [unpack(v) for v in kern]
    pseudo = Multivector(m, {(1 << m) - 1: 1})
    z = [CliffPoly.zero(m) for _ in range(k)]
    one = CliffPoly.constant(1, m)
    ps = CliffPoly.constant(pseudo)
    expected = [
        ([one] + z, [one.scale((-1) ** k)] + z),
        ([ps] + z, [ps.scale((-1) ** (m + k - 1))] + z),
    ]

    def flat(pair):
        R, S = pair
        out = {}
        for tag, polys in (("R", R), ("S", S)):
            for deg, p in enumerate(polys):
                for key, c in p.items():
                    out[(tag, deg, key)] = c
        return out

    all_keys = {}
    vecs_k = [flat(p) for p in kernel]
    vecs_e = [flat(p) for p in expected]
    for v in vecs_k + vecs_e:
        for key in v:
            all_keys.setdefault(key, len(all_keys))
    as_rows = [{all_keys[key]: c for key, c in v.items()} for v in vecs_k + vecs_e]
    joint = rank(as_rows)
    matches = (len(kernel) == 2 and rank(as_rows[len(vecs_k):]) == 2 and joint == 2)
    return RelationKernel(m, k, kernel, expected, matches)
