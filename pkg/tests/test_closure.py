import math

import numpy as np
import pytest

from oracles import SX, SY, SZ, brute_force_closure_dimension, random_anti_hermitian, random_unitary
from weylgate.clifford import clifford_generators, third_order_element, two_gate_universal_set
from weylgate.closure import (
    express_in_closure,
    is_universal,
    lie_closure,
    target_dimension,
    word_coefficients,
)
from weylgate.errors import DimensionError, ValidationError
from weylgate.generators import GeneratorSet
from weylgate.weyl import hermitian_generator_set, pairwise_products, qudit_generators


def _gs(*mats):
    return GeneratorSet(mats, [f"g{i}" for i in range(len(mats))])


def _check_contract(result):
    q = result.basis_array()
    assert np.max(np.abs(q @ q.T - np.eye(len(q)))) <= 1e-9
    for i, a in enumerate(result.basis):
        for b in result.basis[i + 1:]:
            assert express_in_closure(a @ b - b @ a, result).residual < 1e-7


class TestExamples:
    def test_single(self):
        assert lie_closure(_gs(1j * SZ)).dimension == 1

    def test_su2(self):
        r = lie_closure(_gs(1j * SX, 1j * SY))
        assert r.dimension == 3
        assert r.depth == 1
        assert r.certificates == ["g0", "g1", "[g0,g1]"]
        # the new direction is ±iσz
        assert abs(abs(np.vdot(r.basis[2], 1j * SZ / math.sqrt(2)).real) - 1) < 1e-12

    @pytest.mark.parametrize("n,dim", [(1, 3), (2, 10), (3, 21), (4, 36)])
    def test_clifford_dimension_law(self, n, dim):
        r = lie_closure(clifford_generators(n).generator_set())
        assert r.dimension == dim == 2 * n * n + n
        _check_contract(r)

    def test_plain_matrix_input(self):
        assert lie_closure([1j * SX, 1j * SY]).dimension == 3


class TestUniversality:
    def test_clifford_not_universal(self):
        ok, r = is_universal(clifford_generators(2).generator_set(), "projective")
        assert not ok and r.dimension == 10

    def test_third_order_rescue(self):
        g = clifford_generators(2).generator_set().extended([third_order_element(2)], ["e012"])
        ok, r = is_universal(g, "projective")
        assert ok and r.dimension == 15

    def test_qutrit(self):
        ok, r = is_universal(hermitian_generator_set(qudit_generators(3, 1)), "projective")
        assert ok and r.dimension == 8

    def test_full_mode_needs_trace(self):
        g = hermitian_generator_set(qudit_generators(3, 1))
        assert not is_universal(g, "full")[0]
        assert is_universal(g.extended([1j * np.eye(3)], ["phase"]), "full")[0]

    @pytest.mark.parametrize("n", [2, 3])
    def test_two_gate_clifford(self, n):
        assert is_universal(two_gate_universal_set(n))[0]

    def test_qubit_weyl_needs_more(self):
        # at d = 2 the first-order elements span the same algebra as the Clifford set
        assert lie_closure(hermitian_generator_set(qudit_generators(2, 2))).dimension == 10

    def test_target_dimension(self):
        assert target_dimension(4, "full") == 16
        assert target_dimension(4) == 15
        with pytest.raises(ValueError):
            target_dimension(4, "weird")


class TestExpress:
    def test_basis_vector(self):
        r = lie_closure(clifford_generators(2).generator_set())
        x = express_in_closure(r.basis[3], r)
        assert np.allclose(x.coefficients, np.eye(r.dimension)[3], atol=1e-12)
        assert x.in_span()

    def test_zero(self):
        r = lie_closure(_gs(1j * SX, 1j * SY))
        x = express_in_closure(np.zeros((2, 2)), r)
        assert not x.coefficients.any() and x.residual == 0

    def test_sigma_z_direction(self):
        r = lie_closure(_gs(1j * SX, 1j * SY))
        x = express_in_closure(1j * SZ, r)
        assert x.residual < 1e-8
        assert np.allclose(np.abs(x.coefficients), [0, 0, math.sqrt(2)], atol=1e-12)
        # on the raw bracket [iσx, iσy] = -2iσz the coefficient is -1/2
        y, resid = word_coefficients(1j * SZ, r)
        raw_scale = r.words[2].scale * math.sqrt(2) * math.sqrt(2)
        assert resid < 1e-12
        assert y[2] / raw_scale == pytest.approx(-0.5, abs=1e-12)

    def test_outside(self):
        r = lie_closure(_gs(1j * SZ))
        x = express_in_closure(1j * SX, r)
        assert x.residual == pytest.approx(math.sqrt(2))
        assert not x.in_span()

    def test_errors(self):
        r = lie_closure(_gs(1j * SZ))
        with pytest.raises(DimensionError):
            express_in_closure(np.zeros((3, 3)), r)
        with pytest.raises(ValidationError):
            express_in_closure(SX, r)


class TestErrors:
    def test_non_anti_hermitian(self):
        with pytest.raises(ValidationError):
            lie_closure([SX])

    def test_cap(self):
        with pytest.raises(DimensionError):
            lie_closure(_gs(1j * SX, 1j * SY), max_dim=2)
        assert lie_closure(_gs(1j * SX, 1j * SY), max_dim=3).dimension == 3


class TestProperties:
    @pytest.mark.parametrize("family", ["clifford2", "weyl31", "weyl32", "random3"])
    def test_conjugation_invariance(self, rng, family):
        if family == "clifford2":
            gens = list(clifford_generators(2).gens)
        elif family == "weyl31":
            gens = list(hermitian_generator_set(qudit_generators(3, 1)).elements)
        elif family == "weyl32":
            gens = list(pairwise_products(qudit_generators(3, 2)).elements)
        else:
            d = np.diag([1j, -1j, 0])
            gens = [d, random_anti_hermitian(rng, 3)]
        base = lie_closure(gens).dimension
        w = random_unitary(rng, gens[0].shape[0])
        conj = [w @ g @ w.conj().T for g in gens]
        assert lie_closure(conj).dimension == base

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_recombination_invariance(self, rng, n):
        gens = list(clifford_generators(n).gens)
        m = rng.normal(size=(len(gens), len(gens)))
        assert abs(np.linalg.det(m)) > 1e-3
        mixed = [sum(m[i, j] * gens[j] for j in range(len(gens))) for i in range(len(gens))]
        assert lie_closure(mixed).dimension == lie_closure(gens).dimension

    def test_monotone(self, rng):
        gens = list(clifford_generators(2).gens)
        dims = [lie_closure(gens[:k]).dimension for k in range(1, 5)]
        dims.append(lie_closure(gens + [third_order_element(2)]).dimension)
        assert dims == sorted(dims)

    def test_deterministic(self):
        g = hermitian_generator_set(qudit_generators(3, 2))
        a, b = lie_closure(g), lie_closure(g)
        assert a.certificates == b.certificates
        assert np.array_equal(a.basis_array(), b.basis_array())

    def test_contract_weyl(self):
        _check_contract(lie_closure(hermitian_generator_set(qudit_generators(3, 2))))

    def test_word_matrices_are_nested_brackets(self):
        r = lie_closure(hermitian_generator_set(qudit_generators(3, 1)))
        gens = r.generators.as_dict()

        def evaluate(k):
            w = r.words[k]
            if w.parents is None:
                return gens[w.generator]
            a, b = (evaluate(p) for p in w.parents)
            return a @ b - b @ a

        for k, w in enumerate(r.words):
            raw = evaluate(k)
            # unit-norm storage: compare directions
            m = r.word_matrices[k]
            assert np.allclose(raw / np.linalg.norm(raw), m, atol=1e-10)

    @pytest.mark.parametrize("seed", range(4))
    def test_matches_brute_force(self, seed):
        r = np.random.default_rng(seed)
        n = int(r.integers(2, 5))
        gens = [random_anti_hermitian(r, n) for _ in range(int(r.integers(1, 3)))]
        assert lie_closure(gens).dimension == brute_force_closure_dimension(gens)
