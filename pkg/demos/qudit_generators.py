"""
Weyl pairs and qudit generators
===============================

Shift and clock matrices generalise sigma_x and sigma_z to d levels. Their
Hermitian combinations generate su(d^n).
"""

import numpy as np

from weylgate.closure import lie_closure
from weylgate.weyl import dth_root_identity_check, hermitian_generator_set, qudit_generators, weyl_pair

# The pair for a qutrit
p = weyl_pair(3)
print("U =\n", p.u.real)
print("V =\n", np.round(p.v, 3))
print("U V U^dag V^dag = zeta I:", np.allclose(p.u @ p.v @ p.u.conj().T @ p.v.conj().T, p.zeta * np.eye(3)))

# Generators t_k for two qutrits; (sum c_k t_k)^d = (sum c_k^d) I
g = qudit_generators(3, 2)
rng = np.random.default_rng(1)
c = rng.normal(size=4) + 1j * rng.normal(size=4)
print("d-th root identity residual:", dth_root_identity_check(c, g))

# The t_k are not anti-Hermitian, their combinations i(t + t^dag) and t - t^dag are
for d, n in [(3, 1), (5, 1), (4, 1), (3, 2)]:
    dim = lie_closure(hermitian_generator_set(qudit_generators(d, n))).dimension
    print(f"d={d}, n={n}: closure {dim}, target {d ** (2 * n) - 1}")

# At d = 2 the same combinations only reach the Clifford algebra
print("d=2, n=2:", lie_closure(hermitian_generator_set(qudit_generators(2, 2))).dimension)
