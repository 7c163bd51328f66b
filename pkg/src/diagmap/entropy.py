"""Scalar entropy primitives: eta, Shannon entropy, hermitian eigenvalues.

All entropies are in nats (natural logarithm).
"""

import math

import numpy as np

# Values in [-NEG_CLAMP, 0] are treated as exact zeros; anything more
# negative is a hard error rather than silent rounding.
NEG_CLAMP = 1e-12
SUM_TOL = 1e-10
HERMITIAN_TOL = 1e-12


def eta(x: float) -> float:
    """-x*log(x) for x > 0, and 0 at x = 0.

    Accepts x in [-1e-12, 1 + 1e-12]; the tiny windows around 0 and 1
    absorb eigenvalue round-off and are clamped before evaluation.
    """
    if x < -NEG_CLAMP or x > 1.0 + NEG_CLAMP:
        raise ValueError(f"eta argument {x!r} outside [0, 1]")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 0.0
    return -x * math.log(x)


def eta_array(x: np.ndarray) -> np.ndarray:
    """Vectorized -x*log(x) with eta(0) = 0. No domain validation."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 1e-300
    out[pos] = -x[pos] * np.log(x[pos])
    return out


def clamp_probabilities(p, *, neg_tol: float = NEG_CLAMP, sum_tol: float = SUM_TOL) -> np.ndarray:
    """Validate and clean a probability vector.

    Entries in [-neg_tol, 0] are clamped to 0; more negative entries or a
    total mass off 1 by more than sum_tol raise ValueError.
    """
    p = np.asarray(p, dtype=float).copy()
    if p.ndim != 1 or p.size == 0:
        raise ValueError("probability vector must be a non-empty 1-D array")
    if p.min() < -neg_tol:
        raise ValueError(f"negative probability {p.min()!r} below -{neg_tol}")
    p[p < 0.0] = 0.0
    total = p.sum()
    if abs(total - 1.0) > sum_tol:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    return p


def shannon_entropy(p) -> float:
    """Shannon entropy sum(eta(p_i)) in nats.

    Entries are sorted before summation so the result is exactly invariant
    under permutations of the input.
    """
    p = clamp_probabilities(p)
    return float(sum(eta(float(x)) for x in np.sort(p)))


def check_hermitian(H, *, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return H as a complex square array, raising if it is not hermitian."""
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    dev = np.max(np.abs(H - H.conj().T))
    if dev > tol:
        raise ValueError(f"matrix is not hermitian (deviation {dev:.3e})")
    return H


def hermitian_eigenvalues(H) -> np.ndarray:
    """Real eigenvalues of a hermitian matrix, ascending."""
    H = check_hermitian(H)
    return np.linalg.eigvalsh(H)
