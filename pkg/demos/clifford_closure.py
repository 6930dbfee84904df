"""
Clifford generators and their Lie closure
=========================================

The 2n Clifford generators on n qubits close to a small Lie algebra.
Adding a single third-order product makes the set universal.
"""

import numpy as np

from weylgate.clifford import clifford_generators, jordan_wigner, third_order_element
from weylgate.closure import lie_closure
from weylgate.matrix import anticommutator

# Generators for two qubits: i times Paulis with a sigma_z tail
gens = clifford_generators(2)
for label, e in zip(gens.labels, gens.gens):
    print(label)
    print(np.round(e, 3))

# They anticommute and square to -1
print("e0 e1 + e1 e0 =", np.abs(anticommutator(gens.gens[0], gens.gens[1])).max())
print("e0^2 = -I:", np.allclose(gens.gens[0] @ gens.gens[0], -np.eye(4)))

# Fermion operators come from the Hermitian versions
ops = jordan_wigner(2)
print("{a0, a0^dag} = I:", np.allclose(anticommutator(ops.a[0], ops.a_dag[0]), np.eye(4)))

# The commutator closure has dimension 2n^2 + n, far below 4^n - 1
for n in (1, 2, 3, 4):
    dim = lie_closure(clifford_generators(n).generator_set()).dimension
    print(f"n={n}: closure dimension {dim}, 2n^2+n = {2 * n * n + n}, su(2^n) = {4 ** n - 1}")

# One extra element i e0 e1 e2 fills the whole algebra
for n in (2, 3):
    g = clifford_generators(n).generator_set().extended([third_order_element(n)], ["e012"])
    print(f"n={n} with e012: {lie_closure(g).dimension}")
