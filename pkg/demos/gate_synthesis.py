"""
Compiling a unitary into generator exponentials
===============================================

A target is written as exp(h), h is expanded over bracket words of the
closure, and each word exponential is built from group commutators.
"""

from scipy.stats import unitary_group

from weylgate.closure import lie_closure
from weylgate.matrix import distance_up_to_phase
from weylgate.synthesis import compile_hamiltonian, compile_unitary, evaluate_sequence, principal_log
from weylgate.weyl import hermitian_generator_set, qudit_generators

gens = hermitian_generator_set(qudit_generators(3, 1))
closure = lie_closure(gens)
print("closure certificates:", closure.certificates)

target = unitary_group.rvs(3, random_state=7)

# Error falls roughly as 1/sqrt(m) with the Trotter step count m
h = principal_log(target)
for m in (1, 4, 16, 64, 256):
    seq = compile_hamiltonian(h, gens, closure, m)
    dist = distance_up_to_phase(evaluate_sequence(seq, gens), target)
    print(f"m={m:4d}: {len(seq):7d} gates, distance {dist:.4f}")

# compile_unitary doubles m until the distance is below epsilon
rep = compile_unitary(target, gens, closure, epsilon=0.05)
print(f"converged={rep.converged} with m={rep.trotter_steps}, {rep.length} gates, "
      f"distance {rep.achieved_distance:.4f}")
print("first gates:", rep.sequence.to_json()[:4])
