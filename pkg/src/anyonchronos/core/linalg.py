"""Dense small-matrix helpers shared by every module.

All operators are complex128 numpy arrays. Qubit registers are ordered with the
clock (or first) qubit as the most significant bit, i.e. ``np.kron(clock, system)``.
"""
from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from ..errors import DimensionMismatchError, NonUnitaryError
from ..settings import TOL

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"X": X, "Y": Y, "Z": Z}

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
PLUS = (KET0 + KET1) / np.sqrt(2)
MINUS = (KET0 - KET1) / np.sqrt(2)
PLUS_I = (KET0 + 1j * KET1) / np.sqrt(2)
MINUS_I = (KET0 - 1j * KET1) / np.sqrt(2)

NAMED_KETS = {
    "0": KET0,
    "1": KET1,
    "+": PLUS,
    "-": MINUS,
    "+i": PLUS_I,
    "-i": MINUS_I,
}


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def is_unitary(m: np.ndarray, tol: Optional[float] = None) -> bool:
    tol = TOL.unitary if tol is None else tol
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return float(np.max(np.abs(dagger(m) @ m - np.eye(m.shape[0])))) < tol


def require_unitary(m: np.ndarray, what: str = "matrix", tol: Optional[float] = None) -> np.ndarray:
    """Return ``m`` as complex128 or raise ``NonUnitaryError``."""
    tol = TOL.unitary if tol is None else tol
    m = np.asarray(m, dtype=complex)
    if not is_unitary(m, tol):
        raise NonUnitaryError(f"{what} is not unitary within {tol:g}")
    return m


def is_hermitian(m: np.ndarray, tol: Optional[float] = None) -> bool:
    tol = TOL.unitary if tol is None else tol
    return float(np.max(np.abs(m - dagger(m)))) < tol


def kron_all(factors: Iterable[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, factors, np.eye(1, dtype=complex))


def embed(gate: np.ndarray, targets: Sequence[int], n_qubits: int) -> np.ndarray:
    """Place a gate acting on consecutive ``targets`` into an ``n_qubits`` register."""
    k = len(targets)
    if gate.shape != (2**k, 2**k):
        raise DimensionMismatchError(f"gate of shape {gate.shape} cannot act on {k} qubits")
    if list(targets) != list(range(targets[0], targets[0] + k)):
        raise DimensionMismatchError("embedded gates must act on consecutive qubits")
    before = np.eye(2 ** targets[0], dtype=complex)
    after = np.eye(2 ** (n_qubits - targets[0] - k), dtype=complex)
    return kron_all([before, gate, after])


def rot_z(phi: float) -> np.ndarray:
    """``exp(i phi Z / 2)``; note the sign, this is the clock rotation convention."""
    return np.diag([np.exp(0.5j * phi), np.exp(-0.5j * phi)])


def equatorial_ket(phi: float) -> np.ndarray:
    """``rot_z(phi)|+>``."""
    return rot_z(phi) @ PLUS


def equatorial_angle(ket: np.ndarray) -> float:
    """Inverse of ``equatorial_ket`` for a state on the Bloch equator, in [0, 2pi)."""
    ratio = ket[1] / ket[0]
    angle = float(np.mod(-np.angle(ratio), 2 * np.pi))
    return 0.0 if 2 * np.pi - angle < TOL.canonical else angle


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """Pure-state fidelity ``|<a|b>|^2`` of two unit vectors."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"fidelity between shapes {a.shape} and {b.shape}")
    return float(abs(np.vdot(a, b)) ** 2)


def bloch_vector(ket: np.ndarray) -> np.ndarray:
    rho = np.outer(ket, ket.conj()) / np.vdot(ket, ket).real
    return np.array([np.trace(rho @ p).real for p in (X, Y, Z)])


def projector(ket: np.ndarray) -> np.ndarray:
    return np.outer(ket, ket.conj())


def amplitude_matrix(state: np.ndarray) -> np.ndarray:
    """Reshape a two-qubit vector into ``M[c, s]`` with ``|Psi> = sum M_cs |c>|s>``."""
    if state.shape != (4,):
        raise DimensionMismatchError(f"expected a two-qubit vector, got shape {state.shape}")
    return state.reshape(2, 2)


def reduced_first(state: np.ndarray) -> np.ndarray:
    """Reduced density matrix of the first qubit of a two-qubit pure state."""
    m = amplitude_matrix(state)
    return m @ dagger(m)
