"""Sphere averages of monogenic plane waves against their closed forms (m = 3).

Run with ``python3 demos/02_plane_waves.py``.
"""
import numpy as np

from axialmono.planewave import (Exponential, assemble_profiles, bessel_prefactor,
                                 double_factorial_prefactor, example1_profiles, example2_block,
                                 example2_constant, example2_profile, i_h_direct_array,
                                 i_h_profiles, polynomial_prefactor, sphere_rule)
from axialmono.spherical import inner_monogenic_basis

m, k, ell = 3, 1, 1
P = inner_monogenic_basis(m, k, ell)[0]
rule = sphere_rule(m, 30)
x0, x = 0.2, np.array([0.3, -0.5, 0.9])
r = float(np.linalg.norm(x))

# Direct quadrature over S^2 versus the four one-dimensional integrals.
h = Exponential()
direct = i_h_direct_array(h, P, x0, x, rule)
profiles = i_h_profiles(h, m, k, ell, x0, r)
print("direct vs profile discrepancy:", np.max(np.abs(direct - assemble_profiles(profiles, P, x))))

# Bessel closed form: the classical constant works in odd dimension only.
for mm in (2, 3, 4):
    got = np.array(i_h_profiles(h, mm, 0, 1, x0, r))
    for label, pre in (("classical", double_factorial_prefactor), ("general", bessel_prefactor)):
        want = np.array(example1_profiles(mm, 0, 1, x0, r, prefactor=pre))
        print(f"m={mm} {label:9s} rel err {np.max(np.abs(got - want)) / np.max(np.abs(want)):.2e}")

# Polynomial waves land on the building blocks, up to a constant.
F = example2_block(P, 1, "even")
hp = example2_profile(k, 1, "even")
val = F.eval_array(np.concatenate([[x0], x])[None, :])[0]
got = i_h_direct_array(hp, P, x0, x, rule)
for label, pre in (("classical", double_factorial_prefactor), ("polynomial", polynomial_prefactor)):
    c = example2_constant(m, k, 1, "even", prefactor=pre)
    print(f"{label:10s} constant {c:.6f}: rel err {np.max(np.abs(got - c * val)) / np.max(np.abs(got)):.2e}")
