"""Density matrices, pure states, the diagonal (pinching) channel and the
two symmetry projections used throughout: transposition averaging and the
S3 permutation twirl.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .entropy import check_hermitian, eta, hermitian_eigenvalues

TRACE_TOL = 1e-10
PSD_TOL = 1e-10
NORM_TOL = 1e-12

Z_MIN = -0.5
Z_MAX = 1.0


class StateFormatError(ValueError):
    """Raised when a density-matrix file cannot be parsed or validated."""


def check_pure_state(psi) -> np.ndarray:
    """Return psi as a complex vector, raising unless it is normalized."""
    psi = np.asarray(psi, dtype=complex).ravel()
    norm2 = float(np.vdot(psi, psi).real)
    if abs(norm2 - 1.0) > NORM_TOL:
        raise ValueError(f"pure state has squared norm {norm2!r}, not 1")
    return psi


def check_density_matrix(omega) -> np.ndarray:
    """Return omega as a complex array, raising unless it is a valid state."""
    omega = check_hermitian(omega)
    tr = float(np.trace(omega).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix has trace {tr!r}, not 1")
    evals = np.linalg.eigvalsh(omega)
    if evals[0] < -PSD_TOL:
        raise ValueError(f"density matrix has negative eigenvalue {evals[0]!r}")
    return omega


def pure_to_density(psi) -> np.ndarray:
    """Rank-1 projector |psi><psi| of a normalized vector."""
    psi = check_pure_state(psi)
    return np.outer(psi, psi.conj())


def diagonal_channel(omega) -> np.ndarray:
    """Zero all off-diagonal entries (complete measurement in the basis)."""
    omega = check_density_matrix(omega)
    return np.diag(np.diag(omega))


def diagonal_output_entropy(omega) -> float:
    """Entropy of the diagonal of omega, i.e. S(diagonal_channel(omega))."""
    omega = check_density_matrix(omega)
    d = np.sort(np.real(np.diag(omega)))
    d = np.clip(d, 0.0, 1.0)
    return float(sum(eta(float(x)) for x in d))


def von_neumann_entropy(omega) -> float:
    """S(omega) = -Tr omega log omega in nats."""
    omega = check_density_matrix(omega)
    evals = hermitian_eigenvalues(omega)
    evals = np.clip(evals, 0.0, 1.0)
    return float(sum(eta(float(x)) for x in evals))


def real_projection(omega) -> np.ndarray:
    """Average of omega with its transpose; idempotent, fixes real states."""
    omega = check_density_matrix(omega)
    proj = 0.5 * (omega + omega.T)
    evals = np.linalg.eigvalsh(proj)
    assert evals[0] >= -PSD_TOL, "projection of a valid state left the state space"
    if np.max(np.abs(proj.imag)) == 0.0:
        return proj.real.astype(complex)
    return proj


_PERM_MATRICES = [
    np.eye(3)[list(p)] for p in itertools.permutations(range(3))
]


def twirl_s3(omega) -> float:
    """Average omega over all six basis permutations and report the common
    off-diagonal parameter z of the result (times 3, after projecting onto
    real matrices)."""
    omega = check_density_matrix(omega)
    if omega.shape != (3, 3):
        raise ValueError("twirl_s3 expects a 3x3 state")
    avg = np.zeros((3, 3), dtype=complex)
    for perm in _PERM_MATRICES:
        avg += perm @ omega @ perm.T
    avg /= len(_PERM_MATRICES)
    avg = 0.5 * (avg + avg.T)
    off = [avg[0, 1], avg[0, 2], avg[1, 2], avg[1, 0], avg[2, 0], avg[2, 1]]
    z = 3.0 * float(np.mean([v.real for v in off]))
    # round-off guard at the ends of the admissible range
    if Z_MAX < z < Z_MAX + 1e-9:
        z = Z_MAX
    elif Z_MIN - 1e-9 < z < Z_MIN:
        z = Z_MIN
    return z


def check_z(z: float) -> float:
    """Validate the symmetric-family parameter z in [-1/2, 1]."""
    z = float(z)
    if z < Z_MIN - 1e-12 or z > Z_MAX + 1e-12:
        raise ValueError(f"z = {z!r} outside [-1/2, 1]")
    return min(max(z, Z_MIN), Z_MAX)


def symmetric_state(z: float) -> np.ndarray:
    """The permutation-symmetric real 3x3 state with diagonal 1/3 and
    off-diagonal z/3."""
    z = check_z(z)
    m = np.full((3, 3), z / 3.0, dtype=complex)
    np.fill_diagonal(m, 1.0 / 3.0)
    return m


def uniform_fidelity(z: float) -> float:
    """Fidelity of symmetric_state(z) with the uniform superposition,
    F = (2z + 1)/3."""
    z = check_z(z)
    return (2.0 * z + 1.0) / 3.0


@dataclass(frozen=True)
class Decomposition:
    """A convex mixture of pure states: sum_j weights[j] |s_j><s_j|."""

    weights: np.ndarray
    states: list

    def __post_init__(self):
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))
        if len(self.states) != self.weights.size:
            raise ValueError("weights and states have different lengths")

    def __len__(self) -> int:
        return self.weights.size

    def mixture(self) -> np.ndarray:
        """Reassemble sum_j p_j |s_j><s_j|."""
        dim = len(self.states[0])
        out = np.zeros((dim, dim), dtype=complex)
        for p, s in zip(self.weights, self.states):
            out += p * np.outer(s, np.conj(s))
        return out

    def average_output_entropy(self) -> float:
        """Weighted average of the diagonal output entropy of the members."""
        total = 0.0
        for p, s in zip(self.weights, self.states):
            probs = np.clip(np.abs(np.asarray(s)) ** 2, 0.0, 1.0)
            total += p * float(sum(eta(float(x)) for x in np.sort(probs)))
        return total


# ---------------------------------------------------------------------------
# Text format: first line the dimension N, then N rows of N complex entries
# written as "re+imj".
# ---------------------------------------------------------------------------

def format_density_matrix(omega) -> str:
    omega = np.asarray(omega, dtype=complex)
    n = omega.shape[0]
    lines = [str(n)]
    for row in omega:
        lines.append(" ".join(f"{v.real:.17g}{v.imag:+.17g}j" for v in row))
    return "\n".join(lines) + "\n"


def parse_density_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise StateFormatError("empty density-matrix file")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise StateFormatError(f"first line must be the dimension: {exc}") from exc
    if n < 1:
        raise StateFormatError(f"dimension must be positive, got {n}")
    if len(lines) != n + 1:
        raise StateFormatError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise StateFormatError(f"row {i} has {len(tokens)} entries, expected {n}")
        try:
            rows.append([complex(tok) for tok in tokens])
        except ValueError as exc:
            raise StateFormatError(f"row {i}: {exc}") from exc
    omega = np.array(rows, dtype=complex)
    try:
        return check_density_matrix(omega)
    except ValueError as exc:
        raise StateFormatError(str(exc)) from exc


def read_density_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_density_matrix(fh.read())


def write_density_matrix(path, omega) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_density_matrix(omega))
