"""Conditioning the global state on clock outcomes.

For a clock effect ``E`` the system is left in
``rho_s ∝ Tr_c[(E x I)|Psi><Psi|]`` with probability ``Tr[(E x I)|Psi><Psi|]``.
A rank-1 effect ``|tau><tau|`` gives the pure state ``(<tau| x I)|Psi>``, normalized.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union
import logging

import numpy as np
from scipy.linalg import expm

from ..core.linalg import amplitude_matrix, fidelity
from ..core.phase import canonical_phase
from ..errors import (
  DimensionMismatchError,
  NonStationaryStateError,
  ScheduleError,
  ZeroProbabilityError,
)
from ..fusion.basis import qubit_basis
from ..fusion.state import StateVector
from ..io.schema import TickRecord
from ..measurement.povm import PovmEffect
from ..settings import TOL
from .hamiltonians import EffectiveHamiltonians, derive_effective_hamiltonians
from .schedule import ClockSchedule
from .universe import GlobalState

logger = logging.getLogger(__name__)

ClockEffect = Union[PovmEffect, StateVector, np.ndarray]


def _effect_matrix(effect: ClockEffect) -> np.ndarray:
  if isinstance(effect, PovmEffect):
    return effect.matrix
  ket = effect.amplitudes if isinstance(effect, StateVector) else np.asarray(effect, dtype=complex)
  ket = ket.reshape(-1)
  if ket.shape != (2,):
    raise DimensionMismatchError(f"clock effects act on one qubit, got shape {ket.shape}")
  return np.outer(ket, ket.conj()) / np.vdot(ket, ket).real


def _conditional(amplitudes: np.ndarray, e: np.ndarray) -> Tuple[float, np.ndarray]:
  """Probability and unnormalized system density of one clock effect."""
  if e.shape != (2, 2):
    raise DimensionMismatchError(f"clock effect of shape {e.shape}")
  m = amplitude_matrix(amplitudes)
  rho_s = m.T @ e.T @ m.conj()
  return float(np.real(np.trace(rho_s))), rho_s


def conditional_density(global_state: GlobalState, effect: ClockEffect) -> Tuple[float, np.ndarray]:
  """Probability and normalized conditional system density.

  Analysis only: the state is not consumed, but it must not have been conditioned yet.
  """
  global_state.require_fresh()
  p, rho = _conditional(global_state.amplitudes, _effect_matrix(effect))
  if p < TOL.probability_floor:
    raise ZeroProbabilityError(f"clock outcome has probability {p:.3e}")
  return p, rho / p


def _pure(rho: np.ndarray) -> np.ndarray:
  vals, vecs = np.linalg.eigh(rho)
  top = int(np.argmax(vals))
  if vals[top] < 1 - TOL.fidelity:
    logger.warning(f"Conditional system state is mixed (purity eigenvalue {vals[top]:.6f}); "
                   "returning its principal eigenvector")
  return canonical_phase(vecs[:, top])


def _system_state(global_state: GlobalState, vector: np.ndarray) -> StateVector:
  return StateVector(qubit_basis(global_state.model), vector)


def condition(global_state: GlobalState, clock_effect: ClockEffect) -> Tuple[float, StateVector]:
  """Measure the clock once; returns the outcome probability and conditional system state."""
  global_state.require_fresh()
  p, rho = _conditional(global_state.amplitudes, _effect_matrix(clock_effect))
  if p < TOL.probability_floor:
    raise ZeroProbabilityError(f"clock outcome has probability {p:.3e}; no conditional state")
  global_state.consume()
  return p, _system_state(global_state, _pure(rho / p))


@dataclass(frozen=True, eq=False)
class EvolutionReport:
  resource: str
  n_ticks: int
  ticks: List[TickRecord]
  uniform_probability: bool
  hamiltonians: Optional[EffectiveHamiltonians] = field(default=None, repr=False)
  hamiltonian_error: Optional[str] = None

  @property
  def min_fidelity(self) -> Optional[float]:
    values = [t.fidelity_vs_schrodinger for t in self.ticks]
    values = [v for v in values if v is not None]
    return min(values) if values else None

  def to_document(self) -> dict:
    return {
      "resource": self.resource,
      "n_ticks": self.n_ticks,
      "uniform_probability": self.uniform_probability,
      "min_fidelity": self.min_fidelity,
      "ticks": [t.model_dump() for t in self.ticks],
      "hamiltonians": None if self.hamiltonians is None else self.hamiltonians.to_document(),
      "hamiltonian_error": self.hamiltonian_error,
    }


def run_schedule(
  global_state: GlobalState,
  schedule: ClockSchedule,
  system_hamiltonian: Optional[np.ndarray] = None,
) -> EvolutionReport:
  """Condition on every tick of ``schedule`` and compare with Schrodinger evolution.

  The ticks are counterfactual outcomes of one clock measurement, so the global
  state is consumed once.
  """
  hams, error = None, None
  try:
    hams = derive_effective_hamiltonians(global_state, schedule, system_hamiltonian)
  except (NonStationaryStateError, ScheduleError) as e:
    error = str(e)
    logger.warning(f"No effective dynamics for {global_state.resource} state: {e}")
  amplitudes = global_state.consume()

  states: List[Optional[np.ndarray]] = []
  probabilities: List[float] = []
  for effect in schedule.effects:
    p, rho = _conditional(amplitudes, effect.matrix)
    probabilities.append(max(p, 0.0))
    if p < TOL.probability_floor:
      logger.warning(f"Tick {effect.outcome_label} has probability {p:.3e}; skipped")
      states.append(None)
    else:
      states.append(_pure(rho / p))

  origin = states[0]
  ticks = []
  for j, (p, psi) in enumerate(zip(probabilities, states)):
    fid = None
    if hams is not None and origin is not None and psi is not None:
      evolved = expm(-1j * hams.h_s * j) @ origin
      fid = fidelity(psi, evolved)
    angle = schedule.angles[j]
    ticks.append(TickRecord(
      index=j,
      angle=None if angle is None else float(angle),
      probability=p,
      conditional_state=None if psi is None else [[float(z.real), float(z.imag)] for z in psi],
      fidelity_vs_schrodinger=fid,
    ))
  uniform = bool(np.allclose(probabilities, probabilities[0], atol=TOL.fidelity))
  logger.info(f"Ran {schedule.n_ticks}-tick schedule on {global_state.resource} state")
  return EvolutionReport(global_state.resource, schedule.n_ticks, ticks, uniform, hams, error)
