from fractions import Fraction

from hypothesis import given

from axialmono.clifford import Multivector
from axialmono.mpoly import (CliffPoly, cr_bar_left, cr_left, dirac_left, dirac_right, euler,
                             laplacian, monomials, partial, to_latex)
from axialmono.spherical import inner_monogenic_basis
from strategies import polys

E = Multivector.basis
var = CliffPoly.var


def test_evaluation():
    p = var(3, 1) * CliffPoly.constant(E(3, 1))
    assert p(0, 2, 0, 0) == E(3, 1).scale(2)
    assert CliffPoly.norm_sq(3)(0, 1, 2, 2) == 9
    assert CliffPoly.vector_var(2)(5, 3, -1) == Multivector.vector([3, -1])


def test_eval_array_matches_exact():
    p = var(2, 1) * var(2, 2) * CliffPoly.constant(E(2, 1, 2)) + var(2, 0)
    pts = [(0.5, 1.0, -2.0), (1.0, 0.0, 3.0)]
    arr = p.eval_array(pts)
    for row, pt in zip(arr, pts):
        exact = p(*(Fraction(v) for v in pt))
        assert list(row) == [float(exact[b]) for b in range(4)]


def test_dirac_examples():
    e1 = CliffPoly.constant(E(2, 1))
    e2 = CliffPoly.constant(E(2, 2))
    assert dirac_left(var(2, 1) * e1) == CliffPoly.constant(-1, 2)
    assert dirac_left(var(2, 1) * e2 + var(2, 2) * e1).is_zero()


def test_dirac_of_vector_variable():
    for m in range(1, 5):
        x = CliffPoly.vector_var(m)
        assert dirac_left(x) == CliffPoly.constant(-m, m)
        assert dirac_right(x) == CliffPoly.constant(-m, m)


def test_cauchy_riemann_examples():
    m = 3
    x0 = var(m, 0)
    assert cr_left(x0) == CliffPoly.constant(1, m)
    assert cr_left(CliffPoly.vector_var(m) + x0.scale(m)).is_zero()
    assert cr_left(var(m, 1) - x0 * CliffPoly.constant(E(m, 1))).is_zero()


def test_laplacian_examples():
    for m in (2, 3, 4):
        assert laplacian(CliffPoly.norm_sq(m), include_x0=False) == CliffPoly.constant(2 * m, m)


def test_laplacian_of_sandwich_and_norm_times_p():
    for m in (2, 3, 4):
        x = CliffPoly.vector_var(m)
        r2 = CliffPoly.norm_sq(m)
        for k in (0, 1, 2):
            for ell in range(m + 1):
                for P in inner_monogenic_basis(m, k, ell)[:2]:
                    p = P.poly
                    assert laplacian(x * p * x, include_x0=False) == p.scale(2 * P.mu)
                    assert laplacian(r2 * p, include_x0=False) == p.scale(2 * (2 * k + m))


def test_radial_identities_on_inner_monogenics():
    for m in (2, 3, 4):
        x = CliffPoly.vector_var(m)
        for k in range(4):
            for ell in range(m + 1):
                for P in inner_monogenic_basis(m, k, ell)[:1]:
                    p = P.poly
                    assert dirac_left(x * p) == p.scale(-(2 * k + m))
                    for n in (1, 2):
                        lhs = dirac_left(CliffPoly.norm_sq(m, n) * p)
                        rhs = (CliffPoly.norm_sq(m, n - 1) * x * p).scale(2 * n)
                        assert lhs == rhs


def test_homogeneous_part_and_euler():
    p = CliffPoly.constant(1, 3) + var(3, 1) * CliffPoly.constant(E(3, 1))
    assert p.homogeneous_part(1) == var(3, 1) * CliffPoly.constant(E(3, 1))
    q = var(3, 1) * var(3, 2) * CliffPoly.constant(E(3, 1))
    assert euler(q) == q.scale(2)


def test_monomials_order():
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomials(3, 0) == [(0, 0, 0)]


def test_to_latex():
    p = var(2, 1).scale(Fraction(1, 2)) * CliffPoly.constant(E(2, 1, 2)) - var(2, 0) ** 2
    text = to_latex(p)
    assert "x_0^{2}" in text and r"\frac{1}{2}" in text and "e_{12}" in text
    assert to_latex(CliffPoly.zero(2)) == "0"


def test_substitute_x0():
    p = var(2, 0) * var(2, 1) + var(2, 2)
    assert p.substitute_x0(0) == var(2, 2)
    assert p.substitute_x0(2) == var(2, 1).scale(2) + var(2, 2)


@given(polys(max_degree=4))
def test_dirac_squares_to_minus_laplacian(p):
    assert dirac_left(dirac_left(p)) == -laplacian(p, include_x0=False)


@given(polys(max_degree=4, x0=True))
def test_cauchy_riemann_factorizes_laplacian(p):
    assert cr_left(cr_bar_left(p)) == laplacian(p, include_x0=True)


@given(polys(max_degree=3), polys(max_degree=3))
def test_leibniz_for_scalar_partials(p, q):
    if p.m != q.m:
        return
    for j in range(1, p.m + 1):
        assert partial(p * q, j) == partial(p, j) * q + p * partial(q, j)
