"""Two-sided monogenics as right derivatives of left monogenics.

Run with ``python3 demos/03_primitives.py``.
"""
from axialmono import block_first, extract, inner_monogenic_basis, primitivize, right_derivative
from axialmono.planewave import example1_quadruple

P = inner_monogenic_basis(3, 1, 1)[0]
rect = (0, 1, 1, 2)

# Polynomial input: everything is exact and c comes out rational.
q = extract(block_first(P, 1), P)
M, N, c = primitivize(q, rect)
print("M =", M)
print("N =", N)
print("c =", c)
diff = q - right_derivative(M, N, P)
print("q - right derivative:", [str(f) for f in diff.profiles()])

# Bessel input: adaptive Simpson in r, RK4 in x0.
pr = primitivize(example1_quadruple(P), rect)
print("numeric c = %.12f" % pr.c)
print("residuals:", pr.residuals)
