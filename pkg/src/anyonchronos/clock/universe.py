"""Global clock-system states of the six-sigma universe.

The clock triple is the first qubit and the system triple the second. Apart from
the preparations below nothing acts across the two triples, and a prepared state
may be conditioned on its clock only once.
"""
from itertools import product
from threading import RLock
from typing import Optional, Tuple, Union
import logging

import numpy as np

from ..braiding.generators import BELL_PAIR_WORD, evaluate_braid
from ..braiding.group import braid_gate_set, group_closure
from ..braiding.words import BraidWord
from ..core.linalg import KET0, KET1, MINUS, PLUS, fidelity, reduced_first
from ..core.phase import equal_up_to_phase
from ..errors import AlreadyConditionedError, BraidConventionError, DimensionMismatchError
from ..fusion.basis import FusionBasis, two_triple_basis
from ..fusion.state import StateVector, basis_state
from ..model.anyons import AnyonModelSpec, su2_level2
from ..settings import TOL

logger = logging.getLogger(__name__)

PARTITION = ("clock", "system")

# (|+,0> + |-,1>)/sqrt(2)
BRAIDED_BELL_TARGET = (np.kron(PLUS, KET0) + np.kron(MINUS, KET1)) / np.sqrt(2)


class GlobalState:
  """A prepared clock-system state, consumed by its one clock measurement."""

  def __init__(self, state: StateVector, resource: str = "custom"):
    basis = state.basis
    if not isinstance(basis, FusionBasis) or basis.n_anyons != 6:
      raise DimensionMismatchError("a global state lives on the six-sigma clock-system space")
    if any(f != "z" for f in state.frames):
      raise DimensionMismatchError("global states are stored in the z frame")
    self.state = state
    self.resource = resource
    self.partition = PARTITION
    self._lock = RLock()
    self._consumed = False

  @property
  def amplitudes(self) -> np.ndarray:
    return self.state.amplitudes

  @property
  def model(self) -> AnyonModelSpec:
    return self.state.basis.model

  @property
  def consumed(self) -> bool:
    with self._lock:
      return self._consumed

  def require_fresh(self) -> None:
    if self.consumed:
      raise AlreadyConditionedError(f"{self.resource} state was already conditioned on its clock")

  def consume(self) -> np.ndarray:
    """Mark the clock as measured and hand out the amplitudes."""
    with self._lock:
      self.require_fresh()
      self._consumed = True
    logger.debug(f"Consumed {self.resource} global state")
    return self.amplitudes

  def reduced_clock(self) -> np.ndarray:
    return reduced_first(self.amplitudes)

  def to_document(self) -> dict:
    return {"resource": self.resource, "partition": list(self.partition),
            **self.state.to_document()}


def _global(amplitudes: np.ndarray, model: Optional[AnyonModelSpec], resource: str) -> GlobalState:
  basis = two_triple_basis(model or su2_level2())
  return GlobalState(StateVector(basis, amplitudes), resource)


def prepare_bell_singlet(model: Optional[AnyonModelSpec] = None) -> GlobalState:
  """``(|-+> - |+->)/sqrt(2)``, the singlet ``(|01> - |10>)/sqrt(2)``."""
  amps = (np.kron(MINUS, PLUS) - np.kron(PLUS, MINUS)) / np.sqrt(2)
  return _global(amps, model, "singlet")


def prepare_bell_via_braiding(model: Optional[AnyonModelSpec] = None) -> GlobalState:
  """Braid ``s2 s4 s3`` on ``|vac, vac>``; pairs created from the vacuum end up shared."""
  model = model or su2_level2()
  basis = two_triple_basis(model)
  u = evaluate_braid(BraidWord.parse(BELL_PAIR_WORD, 6), model, basis)
  out = u @ basis_state(basis, "00").amplitudes
  f = fidelity(out, BRAIDED_BELL_TARGET)
  if f < 1 - TOL.fidelity:
    raise BraidConventionError(
      f"braid {BELL_PAIR_WORD} on |vac,vac> has fidelity {f:.12f} with (|+,0>+|-,1>)/sqrt(2)")
  logger.info(f"Prepared braided Bell state with {model.name}, fidelity {f:.12f}")
  return GlobalState(StateVector(basis, out), "braided")


def prepare_product(
  clock: np.ndarray = PLUS,
  system: np.ndarray = KET0,
  model: Optional[AnyonModelSpec] = None,
) -> GlobalState:
  clock = np.asarray(clock, dtype=complex)
  system = np.asarray(system, dtype=complex)
  amps = np.kron(clock / np.linalg.norm(clock), system / np.linalg.norm(system))
  return _global(amps, model, "product")


def prepare_partially_entangled(
  theta: float,
  model: Optional[AnyonModelSpec] = None,
) -> GlobalState:
  """``cos(theta)|-+> - sin(theta)|+->``; ``theta = pi/4`` is the singlet."""
  amps = np.cos(theta) * np.kron(MINUS, PLUS) - np.sin(theta) * np.kron(PLUS, MINUS)
  return _global(amps, model, "partial")


GlobalLike = Union[GlobalState, StateVector, np.ndarray]


def global_amplitudes(state: GlobalLike) -> np.ndarray:
  if isinstance(state, GlobalState):
    return state.amplitudes
  if isinstance(state, StateVector):
    return state.amplitudes
  v = np.asarray(state, dtype=complex).reshape(-1)
  if v.shape != (4,):
    raise DimensionMismatchError(f"expected a two-qubit global state, got shape {v.shape}")
  return v


def relate_by_local_clifford(
  source: GlobalLike,
  target: GlobalLike,
  model: Optional[AnyonModelSpec] = None,
) -> Optional[Tuple[np.ndarray, np.ndarray]]:
  """Find braid-group gates with ``(C_c x C_s)|source> = |target>`` up to phase."""
  model = model or su2_level2()
  a, b = global_amplitudes(source), global_amplitudes(target)
  singles = [g.matrix for g in group_closure(braid_gate_set(model, 1))]
  for c_c, c_s in product(singles, repeat=2):
    if equal_up_to_phase(np.kron(c_c, c_s) @ a, b):
      return c_c, c_s
  return None
