"""Qudit generator families built from the Weyl (shift and clock) pair.

For a ``d``-level system with ``ζ = exp(2πi/d)`` the shift ``U`` and clock
``V`` satisfy ``U V = ζ V U``. From them

    τx = U,   τy = ζ^((d-1)/2) U V,   τz = V

and, on ``n`` qudits,

    t_{2k}   = 1 ⊗ ... ⊗ 1 ⊗ τx ⊗ τz ⊗ ... ⊗ τz
    t_{2k+1} = 1 ⊗ ... ⊗ 1 ⊗ τy ⊗ τz ⊗ ... ⊗ τz

with the same layout as the qubit Clifford generators. The half-integer power
of ζ is fixed as ``exp(iπ(d-1)/d)``, which makes ``τy^d = 1`` for every ``d``
and reduces to ``τy = σy`` at ``d = 2``.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .generators import GeneratorSet
from .matrix import dagger, identity, kron_all

MAX_PAIR_DIM = 16
MAX_QUDIT_DIM = 9
MAX_QUDITS = 4
MAX_TOTAL_DIM = 256


def root_of_unity(d):
    return cmath.exp(2j * math.pi / d)


@dataclass(frozen=True)
class WeylPair:
    d: int
    u: np.ndarray
    v: np.ndarray
    zeta: complex


@dataclass(frozen=True)
class QuditGenerators:
    d: int
    n: int
    taus: tuple
    t: tuple
    labels: tuple
    zeta: complex

    @property
    def dim(self):
        return self.d ** self.n

    @property
    def factor_dims(self):
        return (self.d,) * self.n


@dataclass(frozen=True)
class HermitianCombination:
    """``plus = i(t + t†)`` and ``minus = t - t†``, both anti-Hermitian."""

    label: str
    plus: np.ndarray
    minus: np.ndarray


def _is_int(x):
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def weyl_pair(d):
    """Shift and clock matrices of size ``d``."""
    if not _is_int(d) or not 2 <= d <= MAX_PAIR_DIM:
        raise ValidationError(f"d must be an integer in [2, {MAX_PAIR_DIM}], got {d!r}")
    zeta = root_of_unity(d)
    u = np.roll(np.eye(d, dtype=complex), 1, axis=1)
    v = np.diag(zeta ** np.arange(d))
    return WeylPair(d=d, u=u, v=v, zeta=zeta)


def qudit_generators(d, n):
    """The ``2n`` generators ``t_k`` on ``n`` qudits of dimension ``d``."""
    if not _is_int(d) or not 2 <= d <= MAX_QUDIT_DIM:
        raise ValidationError(f"d must be an integer in [2, {MAX_QUDIT_DIM}], got {d!r}")
    if not _is_int(n) or not 1 <= n <= MAX_QUDITS:
        raise ValidationError(f"n must be an integer in [1, {MAX_QUDITS}], got {n!r}")
    if d ** n > MAX_TOTAL_DIM:
        raise ValidationError(f"d**n = {d ** n} exceeds {MAX_TOTAL_DIM}")
    pair = weyl_pair(d)
    half_phase = cmath.exp(1j * math.pi * (d - 1) / d)
    tx, ty, tz = pair.u, half_phase * pair.u @ pair.v, pair.v
    one = identity(d)
    t = []
    for k in range(n):
        tail = [tz] * k
        pad = [one] * (n - k - 1)
        t.append(kron_all(pad + [tx] + tail))
        t.append(kron_all(pad + [ty] + tail))
    labels = tuple(f"t{j}" for j in range(2 * n))
    return QuditGenerators(d=d, n=n, taus=(tx, ty, tz), t=tuple(t), labels=labels, zeta=pair.zeta)


def commutation_phase_exponent(a, b, d, tol=1e-9):
    """Return ``s`` with ``a b a⁻¹ b⁻¹ = ζ^s · 1`` for unitary ``a, b``.

    ``s`` is reported in ``(-d/2, d/2]``. Raises ``ValidationError`` when the
    group commutator is not a multiple of the identity by a power of ζ.
    """
    g = a @ b @ dagger(a) @ dagger(b)
    phase = g[0, 0]
    if np.max(np.abs(g - phase * np.eye(g.shape[0]))) > tol:
        raise ValidationError("group commutator is not scalar")
    zeta = root_of_unity(d)
    for s in range(d):
        if abs(phase - zeta ** s) <= tol:
            return s if s <= d // 2 else s - d
    raise ValidationError(f"commutator phase {phase} is not a power of ζ")


def ordering_exponent(gens):
    """Common exponent ``s`` in ``t_j t_k = ζ^s t_k t_j`` for all ``j < k``.

    Raises ``ValidationError`` if the pairs disagree.
    """
    found = set()
    t = gens.t
    for j in range(len(t)):
        for k in range(j + 1, len(t)):
            found.add(commutation_phase_exponent(t[j], t[k], gens.d))
    if gens.d == 2:
        # ζ = ζ⁻¹ when d = 2
        found = {abs(s) for s in found}
    if len(found) != 1:
        raise ValidationError(f"pairs commute with different phases: {sorted(found)}")
    return found.pop()


def weyl_residual(pair):
    """Max entrywise deviation over ``UVU†V† = ζ``, unitarity and ``U^d = V^d = 1``."""
    one = identity(pair.d)
    u, v = pair.u, pair.v
    checks = [
        u @ v @ dagger(u) @ dagger(v) - pair.zeta * one,
        u @ v - pair.zeta * v @ u,
        u @ dagger(u) - one,
        v @ dagger(v) - one,
        np.linalg.matrix_power(u, pair.d) - one,
        np.linalg.matrix_power(v, pair.d) - one,
    ]
    return max(float(np.max(np.abs(c))) for c in checks)


def tau_residual(gens):
    """Max deviation over the three τ relations and ``τμ^d = 1``."""
    tx, ty, tz = gens.taus
    z = gens.zeta
    one = identity(gens.d)
    checks = [
        tx @ ty - z * ty @ tx,
        ty @ tz - z * tz @ ty,
        tx @ tz - z * tz @ tx,
    ]
    checks += [np.linalg.matrix_power(m, gens.d) - one for m in gens.taus]
    return max(float(np.max(np.abs(c))) for c in checks)


def ordering_residual(gens):
    """Max deviation of ``t_j t_k = ζ^s t_k t_j`` (common ``s``) and ``t_k^d = 1``."""
    s = ordering_exponent(gens)
    phase = gens.zeta ** s
    one = identity(gens.dim)
    worst = 0.0
    t = gens.t
    for j in range(len(t)):
        for k in range(j + 1, len(t)):
            worst = max(worst, float(np.max(np.abs(t[j] @ t[k] - phase * t[k] @ t[j]))))
        worst = max(worst, float(np.max(np.abs(np.linalg.matrix_power(t[j], gens.d) - one))))
    return worst


def dth_root_identity_check(coeffs, gens):
    """Residual of ``(Σ c_k t_k)^d = (Σ c_k^d)·1`` in the Frobenius norm."""
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (len(gens.t),):
        raise ValidationError(f"expected {len(gens.t)} coefficients, got {coeffs.shape}")
    s = sum(c * t for c, t in zip(coeffs, gens.t))
    lhs = np.linalg.matrix_power(s, gens.d)
    rhs = np.sum(coeffs ** gens.d) * identity(gens.dim)
    return float(np.linalg.norm(lhs - rhs))


def _combine(label, t):
    td = dagger(t)
    return HermitianCombination(label=label, plus=1j * (t + td), minus=t - td)


def hermitian_combinations(gens):
    """``i(t_k + t_k†)`` and ``t_k - t_k†`` for every generator."""
    return [_combine(lab, t) for lab, t in zip(gens.labels, gens.t)]


def combinations_to_set(combos, factor_dims=None):
    """Flatten combinations into a GeneratorSet labelled ``<label>+`` / ``<label>-``."""
    elements, labels = [], []
    for c in combos:
        elements += [c.plus, c.minus]
        labels += [c.label + "+", c.label + "-"]
    return GeneratorSet(elements, labels, factor_dims=factor_dims)


def hermitian_generator_set(gens):
    """The ``4n`` first-order anti-Hermitian generators as a GeneratorSet."""
    return combinations_to_set(hermitian_combinations(gens), gens.factor_dims)


def pairwise_product_matrices(gens):
    """``t0`` followed by the adjacent products ``t_k t_{k+1}``, ``k = 0..2n-2``.

    Returns a list of ``(label, matrix)`` pairs.
    """
    if gens.n < 2:
        raise ValidationError("pairwise products need n >= 2")
    t = gens.t
    out = [("t0", t[0])]
    for k in range(len(t) - 1):
        out.append((f"t{k}_{k + 1}", t[k] @ t[k + 1]))
    return out


def pairwise_products(gens):
    """Two-qudit generator set: Hermitian expansion of :func:`pairwise_product_matrices`."""
    combos = [_combine(lab, m) for lab, m in pairwise_product_matrices(gens)]
    return combinations_to_set(combos, gens.factor_dims)
