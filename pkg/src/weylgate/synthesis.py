"""Compile unitaries into products of generator exponentials.

A gate is ``exp(τ A)`` for a generator ``A`` of a :class:`GeneratorSet` and a
real parameter ``τ``. A target Hamiltonian is written over the closure words,
each word exponential is realised through group commutators

    exp(s [A, B]) ≈ exp(√s A) exp(√s B) exp(-√s A) exp(-√s B)

applied recursively down the word's bracket tree, and the whole product is
Trotterized. The inverse factors reuse the exact inverse of the sub-sequence
that approximates ``exp(√s A)``, so approximation errors in nested words enter
only through a commutator.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .closure import express_in_closure, target_dimension, word_coefficients
from .errors import NotCompilableError, ValidationError
from .matrix import as_matrix, distance_up_to_phase, identity, is_unitary, matrix_exponential

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10 ** 6
SPAN_TOL = 1e-6
BRANCH_MARGIN = 1e-6
BRANCH_RETRIES = 8


@dataclass(frozen=True)
class GateSequence:
    """Ordered gates; ``steps[0]`` is the leftmost factor of the product."""

    steps: tuple
    dim: int

    def __len__(self):
        return len(self.steps)

    def inverse(self):
        return GateSequence(tuple((lab, -tau) for lab, tau in reversed(self.steps)), self.dim)

    def repeated(self, times):
        return GateSequence(self.steps * times, self.dim)

    def to_json(self):
        return [[lab, float(tau)] for lab, tau in self.steps]

    @classmethod
    def from_json(cls, data, dim):
        return cls(tuple((str(lab), float(tau)) for lab, tau in data), dim)


@dataclass(frozen=True)
class CompilationReport:
    sequence: GateSequence
    achieved_distance: float
    target_distance: float
    trotter_steps: int
    converged: bool

    @property
    def length(self):
        return len(self.sequence)

    def to_json(self):
        return {
            "converged": self.converged,
            "achieved_distance": self.achieved_distance,
            "target_distance": self.target_distance,
            "trotter_steps": self.trotter_steps,
            "length": self.length,
            "sequence": self.sequence.to_json(),
        }


def evaluate_sequence(seq, gens):
    """Multiply out ``exp(τ_1 A_1) exp(τ_2 A_2) ...``.

    Exponentials are cached per ``(label, τ)``, which matters for Trotterized
    sequences where one step pattern repeats many times.
    """
    table = gens.as_dict()
    cache = {}
    out = identity(gens.dim)
    for lab, tau in seq.steps:
        key = (lab, tau)
        g = cache.get(key)
        if g is None:
            try:
                a = table[lab]
            except KeyError:
                raise KeyError(f"unknown generator label {lab!r}") from None
            g = cache[key] = matrix_exponential(tau * a)
        out = out @ g
    return out


def _word_steps(closure, k, t, memo):
    """Gate list approximating ``exp(t · word_k)`` for the unit-norm word ``k``."""
    key = (k, t)
    if key in memo:
        return memo[key]
    word = closure.words[k]
    if word.parents is None:
        steps = [(word.generator, t / word.scale)]
    else:
        # word_k = [w_i, w_j] / scale
        i, j = word.parents
        c = t / word.scale
        if c < 0:
            i, j, c = j, i, -c
        r = math.sqrt(c)
        a = _word_steps(closure, i, r, memo)
        b = _word_steps(closure, j, r, memo)
        steps = a + b + _invert(a) + _invert(b)
    memo[key] = steps
    return steps


def _invert(steps):
    return [(lab, -tau) for lab, tau in reversed(steps)]


def compile_hamiltonian(h, gens, closure, trotter_steps=1, coefficient_tol=1e-13):
    """Gate sequence approximating ``exp(h)`` for anti-Hermitian ``h``.

    Raises
    ------
    NotCompilableError
        When ``h`` has a component outside the closure larger than ``1e-6``.
    """
    h = as_matrix(h)
    if trotter_steps < 1:
        raise ValueError("trotter_steps must be >= 1")
    expansion = express_in_closure(h, closure)
    if expansion.residual > SPAN_TOL:
        raise NotCompilableError(
            f"target lies outside the closure (residual {expansion.residual:.3g})",
            expansion.residual,
        )
    y, _ = word_coefficients(h, closure)
    memo = {}
    step = []
    for k, coeff in enumerate(y):
        if abs(coeff) <= coefficient_tol:
            continue
        step += _word_steps(closure, k, float(coeff) / trotter_steps, memo)
    return GateSequence(tuple(step), closure.dim).repeated(trotter_steps)


def principal_log(u, rng=None):
    """Traceless anti-Hermitian ``h`` with ``exp(h)`` equal to ``u`` up to phase.

    The target is first normalised to determinant one. Of the ``N`` possible
    normalisations, the one whose principal-branch logarithm has the smallest
    norm is used, so the result does not depend on the global phase of ``u``.
    Candidates with an eigenphase within ``1e-6`` of ``π`` are skipped; if
    all are, the target is rotated by a small random phase and the search
    repeated (at most 8 tries).
    """
    u = as_matrix(u)
    n = u.shape[0]
    rng = np.random.default_rng(0) if rng is None else rng
    # complex Schur form of a normal matrix is diagonal
    t, z = scipy.linalg.schur(u, output="complex")
    base = np.angle(np.diag(t))
    shift = 0.0
    for _ in range(BRANCH_RETRIES + 1):
        best = None
        for k in range(n):
            offset = (np.sum(base) + 2 * np.pi * k) / n + shift
            phases = np.angle(np.exp(1j * (base - offset)))
            if np.any(np.pi - np.abs(phases) <= BRANCH_MARGIN):
                continue
            phases = phases - phases.mean()
            norm = np.linalg.norm(phases)
            if best is None or norm < best[0] - 1e-12:
                best = (norm, phases)
        if best is not None:
            h = (z * (1j * best[1])) @ z.conj().T
            return 0.5 * (h - h.conj().T)
        shift = rng.uniform(-0.1, 0.1)
    raise ValidationError("could not move eigenphases off the branch cut")


def compile_unitary(target, gens, closure, epsilon, max_steps=DEFAULT_MAX_STEPS,
                    initial_trotter_steps=1, rng=None):
    """Compile ``target`` to within ``epsilon`` (distance up to global phase).

    The Trotter step count starts at ``initial_trotter_steps`` and doubles
    until the distance criterion holds or the sequence would exceed
    ``max_steps`` gates, in which case the best sequence found is returned
    with ``converged=False``.
    """
    target = as_matrix(target)
    if not is_unitary(target, 1e-8):
        raise ValidationError("target is not unitary")
    if target.shape[0] != closure.dim:
        raise ValidationError(f"target dim {target.shape[0]} does not match closure dim {closure.dim}")
    if closure.dimension < target_dimension(closure.dim, "projective"):
        raise ValidationError(
            f"closure dimension {closure.dimension} is not universal for N = {closure.dim}"
        )
    h = principal_log(target, rng)
    best = None
    m = int(initial_trotter_steps)
    while True:
        seq = compile_hamiltonian(h, gens, closure, m)
        if len(seq) > max_steps:
            break
        dist = distance_up_to_phase(evaluate_sequence(seq, gens), target)
        log.debug("trotter_steps=%d length=%d distance=%.3g", m, len(seq), dist)
        if best is None or dist < best.achieved_distance:
            best = CompilationReport(seq, dist, epsilon, m, dist <= epsilon)
        if dist <= epsilon or len(seq) == 0:
            break
        m *= 2
    if best is None:
        empty = GateSequence((), closure.dim)
        dist = distance_up_to_phase(identity(closure.dim), target)
        best = CompilationReport(empty, dist, epsilon, 0, dist <= epsilon)
    return best
