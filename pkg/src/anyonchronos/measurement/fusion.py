"""Fusing a pair of sigmas inside one triple, as a projective Pauli measurement.

Per triple the encoded pair measures Z, the inner pair measures X (through F) and
the outer pair measures Y, whose charge basis is the image of the z basis under
the exchange of the inner pair.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
import logging

import numpy as np

from ..braiding.generators import generator_matrix
from ..core.linalg import embed
from ..errors import DimensionMismatchError, ForbiddenFusionError
from ..fusion.basis import FusionBasis, qubit_basis
from ..fusion.state import StateVector, change_basis_z_to_x
from ..model.anyons import AnyonLabel, AnyonModelSpec
from ..settings import TOL

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FusionOutcome:
  pair: Tuple[int, int]
  charge: AnyonLabel
  probability: float
  post_state: Optional[StateVector]


def pauli_frame(model: AnyonModelSpec, axis: str) -> np.ndarray:
  """Columns are the charge eigenvectors ``|vac>, |psi>`` of the pair measuring ``axis``."""
  if axis == "Z":
    return np.eye(2, dtype=complex)
  if axis == "X":
    return model.f_matrix
  if axis == "Y":
    return generator_matrix(model, qubit_basis(model), 2).entries
  raise DimensionMismatchError(f"unknown Pauli axis {axis!r}")


def charge_projectors(model: AnyonModelSpec, axis: str) -> Dict[AnyonLabel, np.ndarray]:
  m = pauli_frame(model, axis)
  return {c: np.outer(m[:, k], m[:, k].conj()) for k, c in enumerate(model.channels)}


def locate_pair(basis: FusionBasis, pair: Tuple[int, int]) -> Tuple[int, str]:
  """Triple index and Pauli axis of a pair, or ``ForbiddenFusionError``."""
  key = tuple(sorted(pair))
  for triple in range(basis.n_qubits):
    for axis, members in basis.triple_pairs(triple).items():
      if key == members:
        return triple, axis
  n = basis.n_anyons
  if all(1 <= p <= n for p in key) and basis.n_qubits > 1:
    raise ForbiddenFusionError(f"pair {pair} spans the clock-system cut")
  raise ForbiddenFusionError(f"pair {pair} is not a pair of one triple on {n} anyons")


def fuse_pair(state: StateVector, pair: Tuple[int, int]) -> List[FusionOutcome]:
  basis = state.basis
  if not isinstance(basis, FusionBasis):
    raise DimensionMismatchError("fusion needs a state on a fusion basis")
  triple, axis = locate_pair(basis, pair)
  if state.frames[triple] != "z":
    state = change_basis_z_to_x(state, triple)
  psi = state.amplitudes
  outcomes = []
  for charge, proj in charge_projectors(basis.model, axis).items():
    full = embed(proj, [triple], basis.n_qubits)
    image = full @ psi
    p = float(np.real(np.vdot(psi, image)))
    p = min(max(p, 0.0), 1.0)
    post = None
    if p > TOL.probability_floor:
      post = StateVector(basis, image / np.sqrt(p), state.frames)
    outcomes.append(FusionOutcome(tuple(sorted(pair)), charge, p, post))
  summary = ", ".join(f"{o.charge}={o.probability:.6f}" for o in outcomes)
  logger.debug(f"Fused pair {pair} ({axis}): {summary}")
  return outcomes

