"""Real Lie algebra generated by a set of anti-Hermitian matrices.

Anti-Hermitian ``N x N`` matrices form a real vector space of dimension ``N²``
with inner product ``Re tr(a† b)``. The closure is grown breadth-first: the
generators seed the basis, then every new element is bracketed with every
basis element and the result is kept when its component orthogonal to the
current span is non-negligible.

Each basis element is backed by a *word*, a nested commutator of generators
such as ``[t0+,[t1-,t0-]]``. The word matrices are stored normalised to unit
Frobenius norm together with the factor that was divided out, which is what
the synthesis module needs to turn a basis direction back into gates.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, ValidationError
from .generators import GeneratorSet
from .matrix import as_matrix, is_anti_hermitian

log = logging.getLogger(__name__)

MAX_CLOSURE_DIM = 256
DEFAULT_RESIDUAL_TOL = 1e-9
# brackets of unit-norm matrices below this norm are rounding noise
BRACKET_NOISE = 1e-10


def _vec(m):
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def _unvec(v, n):
    half = n * n
    return (v[:half] + 1j * v[half:]).reshape(n, n)


@dataclass(frozen=True)
class Word:
    """Node of a certificate tree.

    ``parents`` is ``None`` for a generator, otherwise the indices of the two
    closure elements whose bracket produced this one. The stored word matrix
    is ``raw / scale`` where ``raw`` is the generator itself or the bracket of
    the two (unit-norm) parent word matrices.
    """

    text: str
    depth: int
    parents: tuple = None
    generator: str = None
    scale: float = 1.0


@dataclass(frozen=True)
class ClosureResult:
    dim: int
    basis: tuple
    words: tuple
    word_matrices: tuple
    depth: int
    residual_tol: float
    generators: GeneratorSet = field(repr=False, default=None)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def certificates(self):
        return [w.text for w in self.words]

    def basis_array(self):
        """Basis as rows of real vectors, shape ``(dimension, 2N²)``."""
        return np.array([_vec(b) for b in self.basis])

    def report(self, mode="projective"):
        target = target_dimension(self.dim, mode)
        return {
            "dimension": self.dimension,
            "target": target,
            "universal": self.dimension >= target,
            "depth": self.depth,
            "certificates": self.certificates,
        }


def target_dimension(n, mode="projective"):
    if mode == "full":
        return n * n
    if mode == "projective":
        return n * n - 1
    raise ValueError(f"mode must be 'full' or 'projective', got {mode!r}")


class _Basis:
    """Incremental orthonormal basis of real vectors."""

    def __init__(self, length, capacity):
        self.q = np.zeros((capacity, length))
        self.size = 0

    def residual(self, v):
        q = self.q[: self.size]
        # two passes of classical Gram-Schmidt
        r = v - q.T @ (q @ v)
        r = r - q.T @ (q @ r)
        return r

    def add(self, r):
        self.q[self.size] = r / np.linalg.norm(r)
        self.size += 1


def lie_closure(gens, residual_tol=DEFAULT_RESIDUAL_TOL, max_dim=None):
    """Compute the real Lie algebra generated by ``gens``.

    Parameters
    ----------
    gens : GeneratorSet or sequence of anti-Hermitian matrices
    residual_tol : float
        A candidate is accepted when the norm of its component orthogonal to
        the current basis exceeds ``residual_tol`` times its own norm.
    max_dim : int, optional
        Defaults to ``N²``. Reaching ``N²`` ends the search; needing more than a
        smaller ``max_dim`` raises ``DimensionError``.

    Returns
    -------
    ClosureResult
    """
    if not isinstance(gens, GeneratorSet):
        gens = list(gens)
        gens = GeneratorSet(gens, [f"g{i}" for i in range(len(gens))])
    n = gens.dim
    if n > MAX_CLOSURE_DIM:
        raise DimensionError(f"closure limited to N <= {MAX_CLOSURE_DIM}, got {n}")
    full = n * n
    if max_dim is None:
        max_dim = full
    max_dim = min(int(max_dim), full)
    # brackets are traceless, so traceless generators stay inside su(N)
    reachable = full
    if all(abs(np.trace(g)) <= 1e-12 * max(1.0, np.linalg.norm(g)) for g in gens.elements):
        reachable = full - 1

    basis = _Basis(2 * full, max_dim)
    words = []
    mats = []  # unit-norm word matrices, shape (N, N)

    floor = 1e-12 * max(np.linalg.norm(g) for g in gens.elements)

    def try_add(m, text, depth, parents=None, generator=None):
        """Insert ``m`` if independent. Returns True when the cap is hit."""
        v = _vec(m)
        norm = np.linalg.norm(v)
        if norm <= (floor if parents is None else BRACKET_NOISE):
            return False
        r = basis.residual(v)
        if np.linalg.norm(r) <= residual_tol * norm:
            return False
        if basis.size >= max_dim:
            if max_dim < full:
                raise DimensionError(f"closure dimension exceeds cap {max_dim}")
            return True
        basis.add(r)
        words.append(Word(text, depth, parents, generator, float(norm)))
        mats.append(m / norm)
        return False

    for lab, g in zip(gens.labels, gens.elements):
        try_add(g, lab, 0, generator=lab)

    done = basis.size >= reachable
    head = 0
    while head < len(mats) and not done:
        i = head
        head += 1
        stack = np.array(mats)
        cands = mats[i] @ stack - stack @ mats[i]
        # anything already inside the span stays inside it as the basis grows
        flat = np.concatenate([cands.real.reshape(len(stack), -1), cands.imag.reshape(len(stack), -1)], axis=1)
        norms = np.linalg.norm(flat, axis=1)
        q = basis.q[: basis.size]
        resid = flat - (flat @ q.T) @ q
        keep = np.linalg.norm(resid, axis=1) > residual_tol * norms
        for j in np.nonzero(keep & (norms > BRACKET_NOISE))[0]:
            text = f"[{words[i].text},{words[j].text}]"
            depth = max(words[i].depth, words[j].depth) + 1
            if try_add(cands[j], text, depth, parents=(i, int(j))) or basis.size >= reachable:
                done = True
                break
        log.debug("closure sweep %d: dimension %d", i, basis.size)

    result_basis = tuple(_unvec(v, n) for v in basis.q[: basis.size])
    depth = max((w.depth for w in words), default=0)
    return ClosureResult(
        dim=n,
        basis=result_basis,
        words=tuple(words),
        word_matrices=tuple(mats),
        depth=depth,
        residual_tol=residual_tol,
        generators=gens,
    )


def is_universal(gens, mode="projective", residual_tol=DEFAULT_RESIDUAL_TOL):
    """Decide universality from the closure dimension.

    ``projective`` asks for at least ``N² - 1`` (all traceless directions, so
    every unitary up to a global phase); ``full`` asks for ``N²``.

    Returns
    -------
    (bool, ClosureResult)
    """
    result = lie_closure(gens, residual_tol=residual_tol)
    return result.dimension >= target_dimension(result.dim, mode), result


@dataclass(frozen=True)
class Expansion:
    coefficients: np.ndarray
    residual: float

    def in_span(self, tol=1e-8):
        return self.residual < tol


def express_in_closure(h, closure):
    """Coordinates of ``h`` in the orthonormal closure basis.

    Returns an :class:`Expansion`; ``residual`` is the Frobenius norm of the
    part of ``h`` outside the closure.
    """
    h = as_matrix(h)
    if h.shape[0] != closure.dim:
        raise DimensionError(f"dimension mismatch: {h.shape[0]} vs {closure.dim}")
    if not is_anti_hermitian(h, 1e-8):
        raise ValidationError("express_in_closure requires an anti-Hermitian matrix")
    v = _vec(h)
    q = closure.basis_array().reshape(closure.dimension, -1)
    x = q @ v if closure.dimension else np.zeros(0)
    resid = v - q.T @ x if closure.dimension else v
    return Expansion(coefficients=x, residual=float(np.linalg.norm(resid)))


def word_coefficients(h, closure):
    """Coordinates of ``h`` over the unit-norm word matrices.

    Returns ``(y, residual)`` with ``h ≈ Σ y_k word_matrices[k]``.
    """
    h = as_matrix(h)
    if h.shape[0] != closure.dim:
        raise DimensionError(f"dimension mismatch: {h.shape[0]} vs {closure.dim}")
    if closure.dimension == 0:
        return np.zeros(0), float(np.linalg.norm(h))
    a = np.array([_vec(m) for m in closure.word_matrices]).T
    v = _vec(h)
    y, *_ = np.linalg.lstsq(a, v, rcond=None)
    return y, float(np.linalg.norm(a @ y - v))
