import math

import numpy as np
import pytest

from oracles import SX, SY, SZ, expm_reference, random_anti_hermitian, random_special_unitary
from weylgate.clifford import clifford_generators, two_gate_universal_set
from weylgate.closure import lie_closure
from weylgate.errors import NotCompilableError, ValidationError
from weylgate.generators import GeneratorSet
from weylgate.matrix import distance_up_to_phase, is_unitary
from weylgate.synthesis import (
    GateSequence,
    compile_hamiltonian,
    compile_unitary,
    evaluate_sequence,
    principal_log,
)
from weylgate.weyl import hermitian_generator_set, qudit_generators


@pytest.fixture(scope="module")
def su2():
    g = GeneratorSet([1j * SX, 1j * SY], ["x", "y"])
    return g, lie_closure(g)


@pytest.fixture(scope="module")
def qutrit():
    g = hermitian_generator_set(qudit_generators(3, 1))
    return g, lie_closure(g)


class TestEvaluate:
    def test_empty(self, su2):
        g, _ = su2
        assert np.array_equal(evaluate_sequence(GateSequence((), 2), g), np.eye(2))

    def test_pauli_pi(self):
        g = clifford_generators(1).generator_set()
        u = evaluate_sequence(GateSequence((("e0", math.pi),), 2), g)
        assert np.allclose(u, -np.eye(2), atol=1e-14)

    def test_inverse_pair(self, qutrit):
        g, _ = qutrit
        seq = GateSequence((("t1-", 0.37), ("t1-", -0.37)), 3)
        assert np.allclose(evaluate_sequence(seq, g), np.eye(3), atol=1e-10)

    def test_order(self, su2):
        g, _ = su2
        seq = GateSequence((("x", 0.4), ("y", 0.9)), 2)
        expected = expm_reference(0.4j * SX) @ expm_reference(0.9j * SY)
        assert np.allclose(evaluate_sequence(seq, g), expected, atol=1e-13)

    def test_unknown_label(self, su2):
        g, _ = su2
        with pytest.raises(KeyError):
            evaluate_sequence(GateSequence((("z", 1.0),), 2), g)

    def test_json(self):
        seq = GateSequence((("t0+", 0.125), ("t1-", -2.0)), 3)
        assert seq.to_json() == [["t0+", 0.125], ["t1-", -2.0]]
        assert GateSequence.from_json(seq.to_json(), 3) == seq


class TestCompileHamiltonian:
    def test_raw_generator_single_step(self, qutrit):
        g, c = qutrit
        h = 0.8 * g["t0+"]
        seq = compile_hamiltonian(h, g, c)
        assert len(seq) == 1
        assert distance_up_to_phase(evaluate_sequence(seq, g), expm_reference(h)) < 1e-10

    def test_zero(self, su2):
        g, c = su2
        assert len(compile_hamiltonian(np.zeros((2, 2)), g, c)) == 0

    @pytest.mark.parametrize("theta", [0.3, 1.0, 2.0])
    def test_group_commutator_shrinks(self, su2, theta):
        g, c = su2
        h = 1j * theta * SZ
        target = expm_reference(h)
        dist = {m: distance_up_to_phase(evaluate_sequence(compile_hamiltonian(h, g, c, m), g), target)
                for m in (4, 8, 16, 32)}
        for m in (4, 8, 16):
            assert dist[m] / dist[2 * m] >= 1.3

    def test_trotter_repeats(self, su2):
        g, c = su2
        h = 0.2j * SX + 0.1j * SY
        one = compile_hamiltonian(h, g, c, 1)
        four = compile_hamiltonian(h, g, c, 4)
        assert len(four) == 4 * len(one)

    def test_outside_closure(self):
        g = GeneratorSet([1j * SZ], ["z"])
        with pytest.raises(NotCompilableError) as info:
            compile_hamiltonian(1j * SX, g, lie_closure(g))
        assert info.value.residual == pytest.approx(math.sqrt(2))

    def test_converges_in_trotter_limit(self, qutrit, rng):
        g, c = qutrit
        h = random_anti_hermitian(rng, 3)
        h -= np.trace(h) / 3 * np.eye(3)
        h *= 0.5 / np.linalg.norm(h)
        target = expm_reference(h)
        d = [distance_up_to_phase(evaluate_sequence(compile_hamiltonian(h, g, c, m), g), target)
             for m in (1, 8, 64)]
        assert d[2] < d[1] < d[0]


class TestPrincipalLog:
    def test_round_trip(self, rng):
        u = random_special_unitary(rng, 4)
        h = principal_log(u)
        assert abs(np.trace(h)) < 1e-12
        assert np.allclose(h, -h.conj().T)
        assert distance_up_to_phase(expm_reference(h), u) < 1e-10

    def test_branch_cut(self):
        # eigenvalue exactly -1 needs the phase retry
        u = np.diag([1, -1, 1j]).astype(complex)
        h = principal_log(u)
        assert distance_up_to_phase(expm_reference(h), u) < 1e-10


class TestCompileUnitary:
    def test_identity(self, qutrit):
        g, c = qutrit
        rep = compile_unitary(np.eye(3), g, c, 0.1)
        assert rep.length == 0 and rep.achieved_distance < 1e-12 and rep.converged

    def test_generator_exponential(self, qutrit):
        g, c = qutrit
        target = expm_reference(0.7 * g.elements[0])
        rep = compile_unitary(target, g, c, 1e-8)
        assert rep.length == 1 and rep.achieved_distance < 1e-10

    def test_random_target(self, qutrit, rng):
        g, c = qutrit
        target = random_special_unitary(rng, 3)
        rep = compile_unitary(target, g, c, 0.1)
        assert rep.converged
        assert rep.achieved_distance <= 0.1
        u = evaluate_sequence(rep.sequence, g)
        assert is_unitary(u, 1e-9)
        assert distance_up_to_phase(u, target) == pytest.approx(rep.achieved_distance, abs=1e-12)

    def test_max_steps_not_converged(self, qutrit, rng):
        g, c = qutrit
        rep = compile_unitary(random_special_unitary(rng, 3), g, c, 1e-6, max_steps=200)
        assert not rep.converged
        assert rep.length <= 200
        assert is_unitary(evaluate_sequence(rep.sequence, g), 1e-9)

    def test_inversion(self, qutrit, rng):
        g, c = qutrit
        target = random_special_unitary(rng, 3)
        a = compile_unitary(target, g, c, 0.1)
        b = compile_unitary(target.conj().T, g, c, 0.1)
        ua, ub = evaluate_sequence(a.sequence, g), evaluate_sequence(b.sequence, g)
        bound = a.achieved_distance + b.achieved_distance
        assert distance_up_to_phase(ub, ua.conj().T) <= bound + 1e-12

    def test_phase_invariant(self, qutrit, rng):
        g, c = qutrit
        target = random_special_unitary(rng, 3)
        a = compile_unitary(target, g, c, 0.1)
        b = compile_unitary(np.exp(0.4j) * target, g, c, 0.1)
        assert a.achieved_distance == pytest.approx(b.achieved_distance, abs=1e-9)

    @pytest.mark.parametrize("which", ["qutrit", "two-qubit"])
    def test_monotone_grid(self, qutrit, rng, which):
        if which == "qutrit":
            g, c = qutrit
        else:
            g = two_gate_universal_set(2)
            c = lie_closure(g)
        n = g.dim
        for _ in range(5):
            target = random_special_unitary(rng, n)
            h = principal_log(target)
            d = [distance_up_to_phase(evaluate_sequence(compile_hamiltonian(h, g, c, m), g), target)
                 for m in (2, 4, 8, 16, 32)]
            for a, b in zip(d, d[1:]):
                assert b <= 1.1 * a

    def test_non_universal_rejected(self):
        g = clifford_generators(2).generator_set()
        with pytest.raises(ValidationError):
            compile_unitary(np.eye(4), g, lie_closure(g), 0.1)

    def test_non_unitary_rejected(self, qutrit):
        g, c = qutrit
        with pytest.raises(ValidationError):
            compile_unitary(2 * np.eye(3), g, c, 0.1)

    def test_report_json(self, qutrit):
        g, c = qutrit
        rep = compile_unitary(expm_reference(0.7 * g.elements[1]), g, c, 0.1)
        out = rep.to_json()
        assert out["length"] == 1 and out["converged"] is True
        assert out["sequence"][0][0] == "t0-"
