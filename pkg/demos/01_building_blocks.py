"""Build axial two-sided monogenic polynomials and take them apart again.

Run with ``python3 demos/01_building_blocks.py``.
"""
from fractions import Fraction

from axialmono import (block_first, block_second, decompose_two_sided, extract,
                       inner_monogenic_basis, reconstruct, to_latex, verify)
from axialmono.axial import alpha, vekua_two_sided_residual

m, k, ell = 3, 1, 1

# A vector-valued, degree-one inner spherical monogenic in R^3.
P = inner_monogenic_basis(m, k, ell)[0]
print("P =", to_latex(P.poly))

# First block family at n = 1; the scalar in front of |x|^2 P.
print("alpha =", alpha(1, ell, k, m))
F = block_first(P, 1)
print("F =", to_latex(F))
print("Cauchy-Riemann residuals:", verify(F).as_record())

# F is axial: four profiles in (x0, r) attached to P.
q = extract(F, P)
for name, prof in zip("ABCD", q.profiles()):
    print(f"  {name}(x0, r) = {prof}")
print("Vekua residuals all zero:", all(res.is_zero() for res in vekua_two_sided_residual(q)))

# Mix two degree-3 blocks and recover the pieces.
P2 = inner_monogenic_basis(m, 2, 2)[0]
G = F + block_second(P2, 0).scale(Fraction(-3, 4))
dec = decompose_two_sided(G)
print("decomposition exact:", dec.exact)
print("reconstruction matches:", reconstruct(dec.S, m) == G)
