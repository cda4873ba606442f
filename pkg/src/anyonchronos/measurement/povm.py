"""Clock POVMs realised by coupling the clock to m ancillas.

The clock is the most significant qubit of the circuit register and ancillas start
in ``|0...0>`` unless a preparation is given. Reading every qubit in the
computational basis after ``U`` leaves the clock effects
``E_z = V^dag |z><z| V`` with ``V = U (. x |ancilla>)``.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence
import logging

import numpy as np
from scipy.linalg import null_space

from ..core.linalg import equatorial_angle, equatorial_ket, require_unitary
from ..errors import DimensionMismatchError, PovmError
from ..settings import TOL

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PovmEffect:
  matrix: np.ndarray = field(repr=False)
  outcome_label: str

  @property
  def weight(self) -> float:
    return float(np.real(np.trace(self.matrix)))

  @property
  def rank(self) -> int:
    eig = np.linalg.eigvalsh(self.matrix)
    return int(np.sum(eig > TOL.canonical))

  @property
  def is_zero(self) -> bool:
    return self.rank == 0

  def direction(self) -> np.ndarray:
    """Principal eigenvector, the tick state of a rank-1 effect."""
    vals, vecs = np.linalg.eigh(self.matrix)
    return vecs[:, int(np.argmax(vals))]

  def bloch(self) -> np.ndarray:
    """Bloch vector of the trace-normalized effect."""
    w = self.weight
    if w <= TOL.canonical:
      return np.zeros(3)
    rho = self.matrix / w
    return np.array([
      2 * np.real(rho[0, 1]),
      -2 * np.imag(rho[0, 1]),
      np.real(rho[0, 0] - rho[1, 1]),
    ])

  @property
  def is_equatorial(self) -> bool:
    return self.rank == 1 and abs(self.bloch()[2]) < TOL.canonical

  def angle(self) -> Optional[float]:
    """Clock angle of an equatorial rank-1 effect, ``None`` otherwise."""
    if not self.is_equatorial:
      return None
    return equatorial_angle(self.direction())


def check_povm(effects: Sequence[PovmEffect], dim: int = 2) -> Sequence[PovmEffect]:
  """Raise ``PovmError`` unless the effects are PSD and sum to the identity."""
  if not effects:
    raise PovmError("empty POVM")
  total = np.zeros((dim, dim), dtype=complex)
  for e in effects:
    if e.matrix.shape != (dim, dim):
      raise DimensionMismatchError(f"effect {e.outcome_label} has shape {e.matrix.shape}")
    if float(np.max(np.abs(e.matrix - e.matrix.conj().T))) > TOL.psd:
      raise PovmError(f"effect {e.outcome_label} is not Hermitian")
    low = float(np.min(np.linalg.eigvalsh(e.matrix)))
    if low < -TOL.psd:
      raise PovmError(f"effect {e.outcome_label} has eigenvalue {low:.3e}")
    total += e.matrix
  defect = float(np.max(np.abs(total - np.eye(dim))))
  if defect > TOL.completeness:
    raise PovmError(f"effects sum to identity only within {defect:.3e}")
  return effects


def _bits(index: int, width: int) -> str:
  return format(index, f"0{width}b") if width else ""


def povm_from_circuit(
  u,
  m: int,
  ancilla_state: Optional[np.ndarray] = None,
) -> List[PovmEffect]:
  """Clock effects of the circuit ``u`` on ``m + 1`` qubits, one per output bit string."""
  u = require_unitary(np.asarray(u, dtype=complex), "circuit")
  dim = 2 ** (m + 1)
  if u.shape != (dim, dim):
    raise DimensionMismatchError(f"circuit of shape {u.shape} for {m} ancillas")
  if ancilla_state is None:
    ancilla_state = np.zeros(2 ** m, dtype=complex)
    ancilla_state[0] = 1.0
  ancilla_state = np.asarray(ancilla_state, dtype=complex)
  if ancilla_state.shape != (2 ** m,):
    raise DimensionMismatchError(f"ancilla state of shape {ancilla_state.shape} for {m} ancillas")
  v = u @ np.kron(np.eye(2), ancilla_state.reshape(-1, 1))
  effects = [
    PovmEffect(np.outer(v[z].conj(), v[z]), _bits(z, m + 1))
    for z in range(dim)
  ]
  check_povm(effects)
  return effects


def covariant_equatorial_povm(n: int) -> List[PovmEffect]:
  """``E_j = (2/N)|tau_j><tau_j|`` with ``|tau_j>`` at clock angle ``2 pi j / N``."""
  if n < 2:
    raise PovmError(f"a covariant clock POVM needs at least 2 outcomes, got {n}")
  width = max(1, int(np.ceil(np.log2(n))))
  effects = []
  for j in range(n):
    ket = equatorial_ket(2 * np.pi * j / n)
    effects.append(PovmEffect((2.0 / n) * np.outer(ket, ket.conj()), _bits(j, width)))
  check_povm(effects)
  return effects


def naimark_dilation(effects: Sequence[PovmEffect], m: int) -> np.ndarray:
  """Circuit on ``m + 1`` qubits whose outcome ``k`` realises the k-th rank-1 effect.

  Outcomes beyond the number of effects have zero probability. The columns acting on
  the clock with ancillas in ``|0...0>`` are fixed; the rest are completed with an
  orthonormal basis of their complement.
  """
  check_povm(effects)
  dim = 2 ** (m + 1)
  if len(effects) > dim:
    raise PovmError(f"{len(effects)} outcomes do not fit {m} ancillas (at most {dim})")
  v = np.zeros((dim, 2), dtype=complex)
  for k, e in enumerate(effects):
    if e.rank > 1:
      raise PovmError(f"effect {e.outcome_label} has rank {e.rank}; dilation needs rank 1")
    vals, vecs = np.linalg.eigh(e.matrix)
    top = int(np.argmax(vals))
    v[k] = np.sqrt(max(vals[top], 0.0)) * vecs[:, top].conj()
  u = np.zeros((dim, dim), dtype=complex)
  clock_columns = [0, 2 ** m]
  u[:, clock_columns] = v
  rest = [c for c in range(dim) if c not in clock_columns]
  if rest:
    u[:, rest] = null_space(v.conj().T)
  logger.debug(f"Dilated {len(effects)}-outcome POVM onto {m} ancillas")
  return require_unitary(u, "dilation")


def equatorial_tick_count(effects: Sequence[PovmEffect]) -> int:
  """Distinct equatorial rank-1 directions among the nonzero effects."""
  angles = sorted(a for a in (e.angle() for e in effects if not e.is_zero) if a is not None)
  distinct: List[float] = []
  for a in angles:
    if not distinct or abs(a - distinct[-1]) > TOL.canonical:
      distinct.append(a)
  if len(distinct) > 1 and abs(distinct[0] + 2 * np.pi - distinct[-1]) <= TOL.canonical:
    distinct.pop()
  return len(distinct)

