"""
A deterministic programmable processor
======================================

A classical tape selects, step by step, which unitary acts on the data.
Putting the program itself into superposition entangles it with the data.
"""

import numpy as np

from weylgate.processor import (
    GateTable,
    controlled_unitary,
    direct_product,
    flatten,
    format_program,
    parse_program,
    run,
    superposition_malfunction,
)

program = parse_program("repeat { repeat U5 10 times; repeat U7 20 times } 3 times")
print("canonical form:", format_program(program))
print("tape length:", len(flatten(program)))

# Two small rotations on a qubit
a, b = 0.05, 0.03
table = GateTable({
    "U5": np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]]),
    "U7": np.diag([1, np.exp(1j * b)]),
})
psi = np.array([1, 0], dtype=complex)
out = run(program, table, psi)
print("final state:", np.round(out, 4))
print("agrees with direct product:", np.allclose(out, direct_product(program, table) @ psi))

# Controlled unitary for {I, X} is the CNOT
cnot = controlled_unitary(GateTable({"I": np.eye(2), "X": np.array([[0, 1], [1, 0]])}))
print("controlled unitary:\n", cnot.real.astype(int))

# A program in superposition of I and X leaves one bit of entanglement
x_table = GateTable({"I": np.eye(2), "X": np.array([[0, 1], [1, 0]])})
h = 1 / np.sqrt(2)
for alpha in (1.0, np.cos(np.pi / 8), h):
    beta = np.sqrt(1 - alpha ** 2)
    s = superposition_malfunction(x_table, "I", "X", alpha, beta, [1, 0])
    print(f"alpha={alpha:.3f}: program/data entropy {s:.3f} bits")
