"""Identity checks and generator-family selection shared by the CLI and tests."""

import numpy as np

from . import clifford, weyl
from .errors import ValidationError

DEFAULT_CHECK_TOL = 1e-9
RANDOM_DRAWS = 5


def generator_family(family, n, d=None, use="raw"):
    """Build a :class:`GeneratorSet` by family name.

    ``use`` selects the variant:

    * ``raw`` - clifford: the ``e_k``; weyl: ``i(t+t†)`` and ``t-t†`` of each ``t_k``
    * ``tpm`` - weyl only, same as ``raw``
    * ``two-gate`` - clifford: :func:`clifford.two_gate_universal_set`;
      weyl: :func:`weyl.pairwise_products`
    """
    if family == "clifford":
        if use == "raw":
            return clifford.clifford_generators(n).generator_set()
        if use == "two-gate":
            return clifford.two_gate_universal_set(n)
        raise ValidationError(f"--use {use} is not available for the clifford family")
    if family == "weyl":
        if d is None:
            raise ValidationError("the weyl family needs d")
        gens = weyl.qudit_generators(d, n)
        if use in ("raw", "tpm"):
            return weyl.hermitian_generator_set(gens)
        if use == "two-gate":
            return weyl.pairwise_products(gens)
        raise ValidationError(f"unknown generator variant {use!r}")
    raise ValidationError(f"unknown family {family!r}")


def _check(equation, residual, tol, **extra):
    out = {"equation": equation, "residual": float(residual), "tol": tol,
           "passed": bool(residual <= tol)}
    out.update(extra)
    return out


def _random_coeffs(rng, count, bound=1.0):
    c = rng.normal(size=count) + 1j * rng.normal(size=count)
    return bound * c / np.max(np.abs(c))


def clifford_checks(n, rng, tol=DEFAULT_CHECK_TOL):
    gens = clifford.clifford_generators(n)
    checks = [_check("eCl", clifford.anticommutation_residual(gens), tol, convention="-2delta")]
    root = max(
        clifford.square_root_identity_check(_random_coeffs(rng, 2 * n), gens)
        for _ in range(RANDOM_DRAWS)
    )
    checks.append(_check("ClRoot", root, tol))
    checks.append(_check("fermcom", clifford.fermion_residual(clifford.jordan_wigner(n)), tol))
    return checks


def weyl_checks(d, n, rng, tol=DEFAULT_CHECK_TOL):
    gens = weyl.qudit_generators(d, n)
    checks = [
        _check("UVcom", weyl.weyl_residual(weyl.weyl_pair(d)), tol),
        _check("taucom", weyl.tau_residual(gens), tol),
    ]
    try:
        s = weyl.ordering_exponent(gens)
        checks.append(_check("TorDef", weyl.ordering_residual(gens), tol, exponent=s))
    except ValidationError as exc:
        checks.append({"equation": "TorDef", "residual": float("inf"), "tol": tol,
                       "passed": False, "error": str(exc)})
    root = max(
        weyl.dth_root_identity_check(_random_coeffs(rng, 2 * n), gens)
        for _ in range(RANDOM_DRAWS)
    )
    checks.append(_check("dRoot", root, tol))
    return checks


def identity_suite(family, n, d=None, seed=0, tol=DEFAULT_CHECK_TOL):
    """Run every defining relation of a family; returns a list of check records."""
    rng = np.random.default_rng(seed)
    if family == "clifford":
        return clifford_checks(n, rng, tol)
    if family == "weyl":
        if d is None:
            raise ValidationError("the weyl family needs d")
        return weyl_checks(d, n, rng, tol)
    raise ValidationError(f"unknown family {family!r}")
