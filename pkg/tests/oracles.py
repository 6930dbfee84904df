"""Independent reference computations used to check the package."""

import numpy as np
import scipy.linalg
from scipy.stats import unitary_group

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def kron_loops(a, b):
    """Kronecker product by explicit index arithmetic."""
    p, q = a.shape[0], b.shape[0]
    out = np.zeros((p * q, p * q), dtype=complex)
    for i in range(p):
        for j in range(p):
            for k in range(q):
                for l in range(q):
                    out[i * q + k, j * q + l] = a[i, j] * b[k, l]
    return out


def expm_eig(a):
    """exp of a normal matrix via its eigendecomposition."""
    w, v = np.linalg.eig(a)
    return v @ np.diag(np.exp(w)) @ np.linalg.inv(v)


def expm_reference(a):
    return scipy.linalg.expm(a)


def random_anti_hermitian(rng, n, scale=1.0):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (x - x.conj().T) / 2


def random_unitary(rng, n):
    return unitary_group.rvs(n, random_state=rng)


def random_special_unitary(rng, n):
    u = random_unitary(rng, n)
    return u / np.linalg.det(u) ** (1.0 / n)


def _real_rank(mats, tol=1e-8):
    if not mats:
        return 0, []
    rows = np.array([np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats])
    u, s, vt = np.linalg.svd(rows, full_matrices=False)
    scale = max(s[0], 1.0) if s.size else 1.0
    r = int(np.sum(s > tol * scale))
    n = mats[0].shape[0]
    basis = [(v[: n * n] + 1j * v[n * n:]).reshape(n, n) for v in vt[:r]]
    return r, basis


def brute_force_closure_dimension(gens, depth=6, tol=1e-8):
    """Rank of the span of all nested commutators of ``gens`` up to ``depth``.

    Every bracket of generators can be rewritten as a combination of
    right-nested brackets ``[g1, [g2, [..., gk]]]``, so level ``k+1`` is the
    span of ``[g, x]`` over generators ``g`` and ``x`` in level ``k``. Each
    level is reduced to a basis by SVD before the next one is formed.
    """
    gens = [np.asarray(g, dtype=complex) for g in gens]
    level = gens
    everything = list(gens)
    for _ in range(depth):
        nxt = [g @ x - x @ g for g in gens for x in level]
        _, level = _real_rank(nxt, tol)
        if not level:
            break
        everything += level
        _, reduced = _real_rank(everything, tol)
        everything = reduced
    return _real_rank(everything, tol)[0]
