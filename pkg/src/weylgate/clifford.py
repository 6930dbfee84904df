"""Qubit generator families built from Clifford algebras.

The ``2n`` generators act on ``n`` qubits as

    e_{2k}   = i · 1 ⊗ ... ⊗ 1 ⊗ σx ⊗ σz ⊗ ... ⊗ σz
    e_{2k+1} = i · 1 ⊗ ... ⊗ 1 ⊗ σy ⊗ σz ⊗ ... ⊗ σz

with ``n-k-1`` identities on the left and ``k`` copies of σz on the right.
The leading ``i`` makes them anti-Hermitian, so they square to ``-1``. The
Hermitian versions ``ê_k = -i e_k`` square to ``+1`` and are what the
square-root identity is stated for.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .generators import GeneratorSet
from .matrix import anticommutator, dagger, identity, kron_all

MAX_QUBITS = 6

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli(axis):
    """Return the Pauli matrix for ``axis`` in ``{"x", "y", "z"}``."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def dirac_gammas():
    """The four 4x4 Dirac matrices in block form.

    ``γ0`` has identity blocks off the diagonal and ``γk`` has ``-σk`` in the
    upper-right block and ``σk`` in the lower-left one.
    """
    zero = np.zeros((2, 2), dtype=complex)
    one = identity(2)
    gammas = [np.block([[zero, one], [one, zero]])]
    for axis in "xyz":
        s = pauli(axis)
        gammas.append(np.block([[zero, -s], [s, zero]]))
    return gammas


def _check_qubits(n):
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_QUBITS:
        raise ValidationError(f"qubit count must be an integer in [1, {MAX_QUBITS}], got {n!r}")


def _chain(n, k, head):
    """``1^(n-k-1) ⊗ head ⊗ σz^k``."""
    return kron_all([identity(2)] * (n - k - 1) + [head] + [_PAULI["z"]] * k)


@dataclass(frozen=True)
class CliffordGenerators:
    n: int
    gens: tuple
    labels: tuple

    @property
    def dim(self):
        return 2 ** self.n

    @property
    def hermitian(self):
        """The generators without the leading ``i`` (``ê_k = -i e_k``)."""
        return tuple(-1j * e for e in self.gens)

    def generator_set(self):
        return GeneratorSet(self.gens, self.labels, factor_dims=(2,) * self.n)


@dataclass(frozen=True)
class FermionicOperators:
    n: int
    a: tuple
    a_dag: tuple


def clifford_generators(n):
    """Build the ``2n`` anti-Hermitian Clifford generators on ``n`` qubits."""
    _check_qubits(n)
    gens = []
    for k in range(n):
        gens.append(1j * _chain(n, k, _PAULI["x"]))
        gens.append(1j * _chain(n, k, _PAULI["y"]))
    labels = tuple(f"e{j}" for j in range(2 * n))
    return CliffordGenerators(n=n, gens=tuple(gens), labels=labels)


def jordan_wigner(n):
    """Fermionic creation and annihilation operators on ``n`` modes.

    ``a_k† = (ê_{2k} + i ê_{2k+1}) / 2`` and ``a_k = (ê_{2k} - i ê_{2k+1}) / 2``,
    using the Hermitian generators. With the anti-Hermitian ``e_k`` both
    operators pick up a factor ``i``, ``a_k†`` stops being the adjoint of
    ``a_k`` and ``{a_k†, a_k}`` becomes ``-1``.
    """
    e = clifford_generators(n).hermitian
    a_dag = tuple(0.5 * (e[2 * k] + 1j * e[2 * k + 1]) for k in range(n))
    a = tuple(0.5 * (e[2 * k] - 1j * e[2 * k + 1]) for k in range(n))
    return FermionicOperators(n=n, a=a, a_dag=a_dag)


def two_gate_universal_set(n):
    """Universal set of one- and two-qubit generators.

    Contains ``e0``, the adjacent products ``e_{k,k+1}`` for
    ``k = 0, ..., 2n-2`` and the third-order element ``i e0 e1 e2``, giving
    ``2n + 1`` elements in total.

    ``i e_k e_{k+1}`` is Hermitian (a Hamiltonian), so the set stores the
    anti-Hermitian ``-i · (i e_k e_{k+1}) = e_k e_{k+1}`` in its place.
    """
    _check_qubits(n)
    if n < 2:
        raise ValidationError("two_gate_universal_set needs n >= 2")
    e = clifford_generators(n).gens
    elements = [e[0]]
    labels = ["e0"]
    for k in range(2 * n - 1):
        elements.append(e[k] @ e[k + 1])
        labels.append(f"e{k}_{k + 1}")
    elements.append(1j * e[0] @ e[1] @ e[2])
    labels.append("e0_1_2")
    return GeneratorSet(elements, labels, factor_dims=(2,) * n)


def third_order_element(n):
    """``i e0 e1 e2``, the element that makes the raw generators universal."""
    e = clifford_generators(n).gens
    if len(e) < 3:
        raise ValidationError("third-order element needs n >= 2")
    return 1j * e[0] @ e[1] @ e[2]


def square_root_identity_check(coeffs, gens):
    """Residual of ``(Σ c_k ê_k)² = (Σ c_k²)·1`` in the Frobenius norm."""
    coeffs = np.asarray(coeffs, dtype=complex)
    herm = gens.hermitian
    if coeffs.shape != (len(herm),):
        raise ValidationError(f"expected {len(herm)} coefficients, got {coeffs.shape}")
    s = sum(c * e for c, e in zip(coeffs, herm))
    lhs = s @ s
    rhs = np.sum(coeffs ** 2) * identity(gens.dim)
    return float(np.linalg.norm(lhs - rhs))


def anticommutation_residual(gens):
    """Largest entrywise deviation of ``{e_j, e_k}`` from ``-2 δ_jk · 1``."""
    e = gens.gens
    one = identity(gens.dim)
    worst = 0.0
    for j in range(len(e)):
        for k in range(j, len(e)):
            target = -2.0 * one if j == k else 0.0 * one
            worst = max(worst, float(np.max(np.abs(anticommutator(e[j], e[k]) - target))))
    return worst


def fermion_residual(ops):
    """Largest entrywise deviation from the canonical anticommutation relations."""
    one = identity(2 ** ops.n)
    worst = 0.0
    for j in range(ops.n):
        for k in range(ops.n):
            worst = max(
                worst,
                float(np.max(np.abs(anticommutator(ops.a[k], ops.a[j])))),
                float(np.max(np.abs(anticommutator(ops.a_dag[k], ops.a_dag[j])))),
                float(np.max(np.abs(anticommutator(ops.a_dag[k], ops.a[j]) - (j == k) * one))),
            )
        # a_k† really is the adjoint of a_k
        worst = max(worst, float(np.max(np.abs(dagger(ops.a[j]) - ops.a_dag[j]))))
    return worst
