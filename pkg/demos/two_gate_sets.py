"""
Universal sets of two-site gates
================================

Products of neighbouring generators act on at most two sites and, together
with the first generator, still generate everything.
"""

from weylgate.clifford import two_gate_universal_set
from weylgate.closure import lie_closure
from weylgate.weyl import pairwise_products, qudit_generators

# Qubits: e0, the neighbour products e_k e_(k+1) and i e0 e1 e2
for n in (2, 3):
    gs = two_gate_universal_set(n)
    print(f"qubits n={n}: {gs.labels}")
    print(f"  max sites per gate {gs.max_locality()}, closure {lie_closure(gs).dimension}, "
          f"target {4 ** n - 1}")

# Qudits: t0 and t_k t_(k+1), each expanded into its two Hermitian combinations
gs = pairwise_products(qudit_generators(3, 2))
print("qutrits n=2:", gs.labels)
print(f"  max sites per gate {gs.max_locality()}, closure {lie_closure(gs).dimension}, target 80")

# With three qutrits the sigma_z-like tail no longer squares away,
# so one product reaches across all three sites
gs = pairwise_products(qudit_generators(3, 3))
print("qutrits n=3: max sites per gate", gs.max_locality())
