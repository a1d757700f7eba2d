import pytest
from hypothesis import given

from axialmono.axial import block_second
from axialmono.ckext import NotTwoSidedData, ck_extend, ck_two_sided, verify
from axialmono.clifford import Multivector
from axialmono.mpoly import CliffPoly, cr_left
from axialmono.spherical import inner_monogenic_basis
from strategies import polys, rationals

E = Multivector.basis
var = CliffPoly.var


def test_examples():
    m = 3
    assert ck_extend(CliffPoly.constant(1, m)) == CliffPoly.constant(1, m)
    assert ck_extend(CliffPoly.vector_var(m)) == CliffPoly.vector_var(m) + var(m, 0).scale(m)
    assert ck_extend(var(m, 1)) == var(m, 1) - var(m, 0) * CliffPoly.constant(E(m, 1))


def test_rejects_x0_dependence():
    with pytest.raises(ValueError):
        ck_extend(var(2, 0))


def test_two_sided_rejection_reports_difference():
    g = var(2, 1) * CliffPoly.constant(E(2, 2))
    with pytest.raises(NotTwoSidedData) as info:
        ck_two_sided(g)
    assert info.value.difference == CliffPoly.constant(E(2, 1, 2).scale(2))


def test_two_sided_accepts_constants_and_sandwich_data():
    assert ck_two_sided(CliffPoly.constant(7, 3)) == CliffPoly.constant(7, 3)
    m = 3
    x = CliffPoly.vector_var(m)
    for ell in range(m + 1):
        for P in inner_monogenic_basis(m, 1, ell)[:2]:
            f = ck_two_sided(x * P.poly + P.poly * x)
            assert f == block_second(P, 0)
            assert verify(f).as_record() == {"left_residual": "0", "right_residual": "0"}


@given(polys(max_degree=4))
def test_extension_is_monogenic_with_correct_restriction(g):
    f = ck_extend(g)
    assert cr_left(f).is_zero()
    assert f.substitute_x0(0) == g


@given(polys(max_degree=3), polys(max_degree=3), rationals)
def test_linear(g1, g2, lam):
    if g1.m != g2.m:
        return
    assert ck_extend(g1 + g2.scale(lam)) == ck_extend(g1) + ck_extend(g2).scale(lam)
