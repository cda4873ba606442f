"""State vectors over fusion bases and the qubit encoding.

``|0> = |vac_Z>`` and ``|1> = |psi_Z>`` per triple; ``|+> = |vac_X>`` and
``|-> = |psi_X>``, where the "x" tree fuses the other pair of the triple first.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple
import logging

import numpy as np

from ..core.linalg import NAMED_KETS, dagger, embed
from ..errors import DimensionMismatchError, NormalizationError
from ..settings import TOL
from .basis import Basis, FusionBasis, qubit_basis
from ..model.anyons import AnyonModelSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StateVector:
  basis: Basis
  amplitudes: np.ndarray = field(repr=False)
  frames: Tuple[str, ...] = ()

  def __post_init__(self):
    amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
    if amps.shape != (self.basis.dim,):
      raise DimensionMismatchError(
        f"{amps.shape[0]} amplitudes for a basis of dim {self.basis.dim}")
    norm = np.linalg.norm(amps)
    if abs(norm - 1.0) > TOL.norm:
      raise NormalizationError(f"state norm {norm:.12g} differs from 1")
    object.__setattr__(self, "amplitudes", amps)
    if not self.frames:
      object.__setattr__(self, "frames", ("z",) * self.basis.n_qubits)

  @classmethod
  def normalized(cls, basis: Basis, amplitudes, frames: Tuple[str, ...] = ()) -> "StateVector":
    amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
    return cls(basis, amps / np.linalg.norm(amps), frames)

  @property
  def dim(self) -> int:
    return self.basis.dim

  def to_document(self) -> dict:
    return {
      "basis": self.basis.describe(),
      "frames": list(self.frames),
      "amplitudes": [[float(z.real), float(z.imag)] for z in self.amplitudes],
    }


def change_basis_z_to_x(state: StateVector, triple: Optional[int] = None) -> StateVector:
  """Re-express one triple in its other fusion order (F-move); involutive.

  On a three-anyon state ``triple`` may be omitted. On the six-anyon basis it
  selects the clock (0) or system (1) triple.
  """
  basis = state.basis
  if not isinstance(basis, FusionBasis):
    raise DimensionMismatchError("basis change needs a fusion basis")
  if triple is None:
    if basis.n_qubits != 1:
      raise DimensionMismatchError("a triple index is required on the six-anyon basis")
    triple = 0
  if not 0 <= triple < basis.n_qubits:
    raise DimensionMismatchError(f"triple {triple} out of range for {basis.n_anyons} anyons")
  f = basis.model.f_matrix
  move = dagger(f) if state.frames[triple] == "z" else f
  op = embed(move, [triple], basis.n_qubits)
  frames = list(state.frames)
  frames[triple] = "x" if frames[triple] == "z" else "z"
  return StateVector(basis, op @ state.amplitudes, tuple(frames))


def encode_qubit(label: str, model: AnyonModelSpec) -> StateVector:
  """Computational ket by name (``0 1 + - +i -i``) on the three-sigma basis."""
  if label not in NAMED_KETS:
    raise DimensionMismatchError(f"unknown qubit label {label!r}")
  return StateVector(qubit_basis(model), NAMED_KETS[label])


def decode_qubit(state: StateVector) -> Tuple[complex, complex]:
  if state.dim != 2:
    raise DimensionMismatchError(f"decode needs a single encoded qubit, got dim {state.dim}")
  if state.frames[0] != "z":
    raise DimensionMismatchError("decode expects the z frame")
  a0, a1 = state.amplitudes
  return complex(a0), complex(a1)


def basis_state(basis: Basis, bits: str) -> StateVector:
  amps = np.zeros(basis.dim, dtype=complex)
  amps[basis.encoding.from_bits(bits)] = 1.0
  return StateVector(basis, amps)
