"""Labelled sets of anti-Hermitian generators and tensor-factor locality."""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, ValidationError
from .matrix import DEFAULT_TOL, as_matrix, is_anti_hermitian, matrix_to_dict


def locality(m, factor_dims, tol=DEFAULT_TOL):
    """Tensor positions on which ``m`` acts nontrivially.

    Position ``p`` is trivial when ``m`` equals its normalised partial trace
    over ``p`` tensored back with the identity on ``p``. The returned set is
    the complement of the trivial positions, which is the minimal support.

    Parameters
    ----------
    m : (N, N) array
    factor_dims : sequence of int
        Local dimensions, leftmost tensor factor first. Their product must be N.

    Returns
    -------
    set of int
    """
    m = as_matrix(m)
    dims = [int(x) for x in factor_dims]
    if math.prod(dims) != m.shape[0]:
        raise DimensionError(f"factor dims {dims} do not multiply to {m.shape[0]}")
    k = len(dims)
    t = m.reshape(dims + dims)
    support = set()
    for p in range(k):
        moved = np.moveaxis(t, [p, k + p], [2 * k - 2, 2 * k - 1])
        reduced = np.trace(moved, axis1=-2, axis2=-1) / dims[p]
        rebuilt = reduced[..., None, None] * np.eye(dims[p])
        if np.max(np.abs(rebuilt - moved)) > tol:
            support.add(p)
    return support


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered anti-Hermitian generators with labels and locality metadata.

    ``factor_dims`` describes the tensor structure used to compute ``supports``;
    it may be ``None`` when no locality information is wanted.
    """

    elements: tuple
    labels: tuple
    factor_dims: tuple = None
    supports: tuple = field(default=None)

    def __post_init__(self):
        elements = tuple(as_matrix(np.array(e, dtype=complex)) for e in self.elements)
        labels = tuple(str(x) for x in self.labels)
        if not elements:
            raise ValidationError("generator set is empty")
        if len(labels) != len(elements):
            raise ValidationError("one label per element is required")
        if len(set(labels)) != len(labels):
            raise ValidationError("labels must be unique")
        dim = elements[0].shape[0]
        for lab, e in zip(labels, elements):
            if e.shape[0] != dim:
                raise DimensionError(f"generator {lab} has dim {e.shape[0]}, expected {dim}")
            if not is_anti_hermitian(e):
                raise ValidationError(f"generator {lab} is not anti-Hermitian")
        for e in elements:
            e.setflags(write=False)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "labels", labels)
        if self.factor_dims is not None and self.supports is None:
            fd = tuple(int(x) for x in self.factor_dims)
            object.__setattr__(self, "factor_dims", fd)
            sup = tuple(frozenset(locality(e, fd)) for e in elements)
            object.__setattr__(self, "supports", sup)

    @property
    def dim(self):
        return self.elements[0].shape[0]

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, label):
        try:
            return self.elements[self.labels.index(label)]
        except ValueError:
            raise KeyError(label) from None

    def as_dict(self):
        return dict(zip(self.labels, self.elements))

    def max_locality(self):
        if self.supports is None:
            return None
        return max(len(s) for s in self.supports)

    def extended(self, elements, labels):
        """Return a new set with extra generators appended."""
        return GeneratorSet(
            self.elements + tuple(elements),
            self.labels + tuple(labels),
            factor_dims=self.factor_dims,
        )

    def to_json(self):
        out = []
        for i, (lab, e) in enumerate(zip(self.labels, self.elements)):
            entry = {"label": lab, "matrix": matrix_to_dict(e)}
            if self.supports is not None:
                entry["support"] = sorted(self.supports[i])
            out.append(entry)
        return out
