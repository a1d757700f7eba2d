from fractions import Fraction

import pytest
from hypothesis import given

from axialmono.clifford import Multivector, mu
from axialmono.mpoly import CliffPoly, dirac_left, dirac_right, laplacian
from axialmono.spherical import (InnerMonogenic, fischer_harmonic, fischer_monogenic,
                                 inner_monogenic_basis, lemfund_kernel, two_sided_basis,
                                 two_sided_check)
from strategies import polys

E = Multivector.basis
var = CliffPoly.var


def span_contains(basis, p):
    # p is in the span iff adding it does not raise the rank
    from axialmono.linalg import rank
    from axialmono.spherical import images_to_rows
    rows, _ = images_to_rows([b.poly for b in basis] + [p])
    rows_without, _ = images_to_rows([b.poly for b in basis])
    return rank(rows) == rank(rows_without)


def test_constant_vectors():
    basis = inner_monogenic_basis(2, 0, 1)
    assert len(basis) == 2
    assert span_contains(basis, CliffPoly.constant(E(2, 1)))


def test_linear_vector_valued_m2():
    basis = inner_monogenic_basis(2, 1, 1)
    c = CliffPoly.constant
    assert span_contains(basis, var(2, 1) * c(E(2, 1)) - var(2, 2) * c(E(2, 2)))
    assert span_contains(basis, var(2, 1) * c(E(2, 2)) + var(2, 2) * c(E(2, 1)))
    assert not span_contains(basis, var(2, 1) * c(E(2, 1)))


def test_no_scalar_linear_monogenics():
    assert inner_monogenic_basis(3, 1, 0) == []


def test_basis_elements_are_two_sided_and_grade_pure():
    for m in (2, 3, 4):
        for k in range(4):
            for P in two_sided_basis(m, k):
                assert dirac_left(P.poly).is_zero() and dirac_right(P.poly).is_zero()
                assert P.poly.grades() == {P.ell}
                assert two_sided_check(P.poly).two_sided


def test_dimension_matches_direct_kernel():
    # kernel of the left and right Dirac operators on all degree-k polynomials
    from axialmono.linalg import nullspace
    from axialmono.spherical import homogeneous_unit_basis, images_to_rows
    for m in (2, 3):
        for k in range(3):
            units = homogeneous_unit_basis(m, k)
            tagged = []
            for u in units:
                img = {(e + (0,), b): c for (e, b), c in dirac_left(u).items()}
                img.update({(e + (1,), b): c for (e, b), c in dirac_right(u).items()})
                tagged.append(img)
            rows, _ = images_to_rows(tagged)
            assert len(nullspace(rows, len(units))) == len(two_sided_basis(m, k))


def test_inner_monogenic_validation():
    with pytest.raises(ValueError):
        InnerMonogenic(2, 1, 1, var(2, 1) * CliffPoly.constant(E(2, 1)))
    with pytest.raises(ValueError):
        InnerMonogenic(2, 0, 1, CliffPoly.constant(E(2, 1, 2)))


def test_fischer_harmonic_examples():
    r2 = CliffPoly.norm_sq(3)
    assert fischer_harmonic(r2) == (CliffPoly.zero(3), CliffPoly.constant(1, 3))
    p = var(3, 1) * var(3, 2)
    assert fischer_harmonic(p) == (p, CliffPoly.zero(3))
    H, Q = fischer_harmonic(var(2, 1) ** 2)
    assert H == (var(2, 1) ** 2 - var(2, 2) ** 2).scale(Fraction(1, 2))
    assert Q == CliffPoly.constant(Fraction(1, 2), 2)


def test_fischer_two_term_instance():
    for m in (2, 3, 4):
        x = CliffPoly.vector_var(m)
        for k in (0, 1, 2):
            for ell in range(m + 1):
                for P in inner_monogenic_basis(m, k, ell)[:1]:
                    coef = Fraction(mu(ell, m), 2 * k + m)
                    p = x * P.poly * x
                    H, Q = fischer_harmonic(p)
                    assert Q == P.poly.scale(coef)
                    assert H == p - CliffPoly.norm_sq(m) * P.poly.scale(coef)


def test_fischer_monogenic_examples():
    m = 3
    x = CliffPoly.vector_var(m)
    M, U, V = fischer_monogenic(x)
    assert M.is_zero() and x * U + V * x == x
    M, U, V = fischer_monogenic(CliffPoly.norm_sq(m))
    assert M.is_zero() and x * U + V * x == CliffPoly.norm_sq(m)
    P = inner_monogenic_basis(m, 2, 1)[0].poly
    M, U, V = fischer_monogenic(P)
    assert M == P and U.is_zero() and V.is_zero()


@given(polys(m=3, homogeneous=3, max_terms=5))
def test_fischer_harmonic_random(p):
    H, Q = fischer_harmonic(p)
    assert laplacian(H, include_x0=False).is_zero()
    assert H + CliffPoly.norm_sq(3) * Q == p


@given(polys(m=2, homogeneous=4, max_terms=5))
def test_fischer_monogenic_random(p):
    M, U, V = fischer_monogenic(p)
    x = CliffPoly.vector_var(2)
    assert dirac_left(M).is_zero() and dirac_right(M).is_zero()
    assert M + x * U + V * x == p


def test_two_sided_check_examples():
    rep = two_sided_check(var(2, 1) * CliffPoly.constant(E(2, 2)))
    assert not rep.two_sided and not rep.grade_monogenic[1] and rep.verdicts_agree
    c = CliffPoly.constant(Multivector(3, {0: 2, 0b111: -5}))
    assert two_sided_check(c).two_sided


@given(polys(max_degree=3))
def test_verdicts_agree(p):
    assert two_sided_check(p).verdicts_agree


@pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (3, 3)])
def test_relation_kernel(m, k):
    lk = lemfund_kernel(m, k)
    assert lk.dimension == 2
    assert lk.matches


def test_relation_kernel_needs_positive_degree():
    with pytest.raises(ValueError):
        lemfund_kernel(2, 0)
