"""Dense complex matrix primitives.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128`` and shape
``(N, N)``. Every function here is pure: inputs are never modified.
"""

import json
import math
from functools import reduce

import numpy as np

from .errors import DimensionError, ValidationError

MAX_DIM = 4096
DEFAULT_TOL = 1e-10


def as_matrix(a):
    """Coerce ``a`` to a finite square complex128 array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionError(f"expected a nonempty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix has non-finite entries")
    return m


def identity(n):
    return np.eye(n, dtype=complex)


def dagger(a):
    return np.conj(np.transpose(a))


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")


# -- predicates ---------------------------------------------------------------

def is_unitary(a, tol=DEFAULT_TOL):
    a = np.asarray(a)
    return bool(np.max(np.abs(a @ dagger(a) - np.eye(a.shape[0]))) <= tol)


def is_hermitian(a, tol=DEFAULT_TOL):
    a = np.asarray(a)
    return bool(np.max(np.abs(a - dagger(a))) <= tol)


def is_anti_hermitian(a, tol=DEFAULT_TOL):
    a = np.asarray(a)
    return bool(np.max(np.abs(a + dagger(a))) <= tol)


def is_traceless(a, tol=DEFAULT_TOL):
    return bool(abs(np.trace(a)) <= tol)


# -- algebra ------------------------------------------------------------------

def tensor_product(a, b, *more, max_dim=MAX_DIM):
    """Kronecker product ``a ⊗ b ⊗ ...``.

    Raises
    ------
    DimensionError
        If the resulting dimension exceeds ``max_dim``.
    """
    mats = [as_matrix(m) for m in (a, b) + more]
    dim = math.prod(m.shape[0] for m in mats)
    if dim > max_dim:
        raise DimensionError(f"tensor product dimension {dim} exceeds cap {max_dim}")
    return reduce(np.kron, mats)


def kron_all(mats, max_dim=MAX_DIM):
    """Kronecker product of a sequence; the empty product is ``[[1]]``."""
    mats = list(mats)
    if not mats:
        return identity(1)
    if len(mats) == 1:
        return as_matrix(mats[0])
    return tensor_product(*mats, max_dim=max_dim)


def commutator(a, b):
    a, b = np.asarray(a), np.asarray(b)
    _check_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a, b):
    a, b = np.asarray(a), np.asarray(b)
    _check_same_dim(a, b)
    return a @ b + b @ a


def frobenius_inner(a, b):
    """Hilbert-Schmidt inner product ``tr(a† b)``."""
    a, b = np.asarray(a), np.asarray(b)
    _check_same_dim(a, b)
    return complex(np.vdot(a, b))


def matrix_exponential(a):
    """Matrix exponential by scaling and squaring.

    The input is scaled by ``2**-s`` so its 1-norm is at most 0.5, a Taylor
    series is summed until the next term drops below double-precision
    resolution, and the result is squared ``s`` times.
    """
    a = as_matrix(a)
    n = a.shape[0]
    norm = np.linalg.norm(a, 1)
    s = 0
    if norm > 0.5:
        s = int(math.ceil(math.log2(norm / 0.5)))
    x = a / (2.0 ** s)
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    # ||x|| <= 0.5, so 30 terms bound the remainder far below 1e-16
    for k in range(1, 30):
        term = term @ x / k
        result = result + term
        if np.max(np.abs(term)) < 1e-18:
            break
    for _ in range(s):
        result = result @ result
    return result


def distance_up_to_phase(a, b, tol=1e-8):
    """Frobenius distance between two unitaries, minimised over a global phase.

    Equals ``sqrt(2N - 2|tr(a† b)|)``; evaluated as ``‖a - e^{iφ} b‖`` at the
    optimal phase, which avoids the cancellation in the closed form.
    """
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    if not (is_unitary(a, tol) and is_unitary(b, tol)):
        raise ValidationError("distance_up_to_phase requires unitary inputs")
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(a - phase * b))


# -- serialization ------------------------------------------------------------

def matrix_to_dict(a):
    a = as_matrix(a)
    return {
        "dim": int(a.shape[0]),
        "re": [float(x) for x in a.real.ravel()],
        "im": [float(x) for x in a.imag.ravel()],
    }


def matrix_from_dict(obj):
    dim = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros(dim * dim)), dtype=float)
    if re.size != dim * dim or im.size != dim * dim:
        raise DimensionError(f"expected {dim * dim} entries for dim {dim}")
    return as_matrix((re + 1j * im).reshape(dim, dim))


def dumps_matrix(a):
    return json.dumps(matrix_to_dict(a))


def loads_matrix(text):
    return matrix_from_dict(json.loads(text))
