"""Axially symmetric two-sided monogenic functions in exact Clifford arithmetic.

The modules build on each other in this order: :mod:`.clifford` (the algebra
R_{0,m}), :mod:`.mpoly` (Clifford-valued polynomials and their operators),
:mod:`.ckext`, :mod:`.spherical`, :mod:`.axial`, :mod:`.specfun`,
:mod:`.planewave` and :mod:`.primitive`.  :mod:`.battery` and :mod:`.cli` sit
on top.
"""
from .axial import (AxialQuadruple, NotAxialError, RadialPoly, assemble, block, block_first,
                    block_second, decompose_two_sided, extract, reconstruct, vekua_left_residual,
                    vekua_two_sided_residual)
from .ckext import NotTwoSidedData, ck_extend, ck_two_sided, verify
from .clifford import Multivector, conjugate, geometric_product, grade_project, mu, sandwich_sum
from .mpoly import CliffPoly, cr_left, cr_right, dirac_left, dirac_right, laplacian, to_latex
from .primitive import primitivize, right_derivative
from .spherical import (InnerMonogenic, fischer_harmonic, fischer_monogenic,
                        inner_monogenic_basis, lemfund_kernel, two_sided_basis, two_sided_check)

__version__ = "0.1.0"

__all__ = [
    "AxialQuadruple", "CliffPoly", "InnerMonogenic", "Multivector", "NotAxialError",
    "NotTwoSidedData", "RadialPoly", "assemble", "block", "block_first", "block_second",
    "ck_extend", "ck_two_sided", "conjugate", "cr_left", "cr_right", "decompose_two_sided",
    "dirac_left", "dirac_right", "extract", "fischer_harmonic", "fischer_monogenic",
    "geometric_product", "grade_project", "inner_monogenic_basis", "laplacian", "lemfund_kernel",
    "mu", "primitivize", "reconstruct", "right_derivative", "sandwich_sum", "to_latex",
    "two_sided_basis", "two_sided_check", "vekua_left_residual", "vekua_two_sided_residual",
    "verify",
]
