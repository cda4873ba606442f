"""Effective clock and system Hamiltonians derived from the global state.

With ``|Psi> = sum M[c, s] |c>|s>`` and ticks ``|tau_j> = exp(-i H_c j)|tau_0>``, the
conditional system states are ``M^T conj(tau_j)``, which evolve under
``H_s = -M^T conj(H_c) M^-T``. The pair is physical only if ``H_s`` is Hermitian and
``(H_c x I + I x H_s)|Psi> = E|Psi>``.
"""
from dataclasses import dataclass, field
from typing import Optional, Union
import logging

import numpy as np
from scipy.linalg import expm

from ..core.linalg import I2, amplitude_matrix, dagger, fidelity, is_hermitian
from ..errors import NonStationaryStateError, ScheduleError
from ..fusion.state import StateVector
from ..settings import TOL
from .schedule import ClockSchedule
from .universe import GlobalState, global_amplitudes

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EffectiveHamiltonians:
  h_c: np.ndarray = field(repr=False)
  h_s: np.ndarray = field(repr=False)
  total_eigenvalue: float
  residual: float = 0.0
  pinned: bool = False

  @property
  def total(self) -> np.ndarray:
    return np.kron(self.h_c, I2) + np.kron(I2, self.h_s)

  def to_document(self) -> dict:
    return {
      "h_c": self.h_c,
      "h_s": self.h_s,
      "total_eigenvalue": self.total_eigenvalue,
      "residual": self.residual,
      "system_pinned": self.pinned,
    }


def _check_pinned(m: np.ndarray, h_c: np.ndarray, h_s: np.ndarray, schedule: ClockSchedule):
  """Conditional states at every tick must follow ``exp(-i H_s j)`` from tick 0."""
  origin = schedule.tick_states[0]
  step_c, step_s = expm(-1j * h_c), expm(-1j * h_s)
  tau, expected = origin, m.T @ origin.conj()
  for j in range(schedule.n_ticks):
    actual = m.T @ tau.conj()
    f = fidelity(actual / np.linalg.norm(actual), expected / np.linalg.norm(expected))
    if f < 1 - TOL.fidelity:
      raise NonStationaryStateError(
        f"pinned system Hamiltonian misses tick {j} (fidelity {f:.6f})")
    tau, expected = step_c @ tau, step_s @ expected


def derive_effective_hamiltonians(
  global_state: Union[GlobalState, StateVector, np.ndarray],
  schedule: ClockSchedule,
  system_hamiltonian: Optional[np.ndarray] = None,
) -> EffectiveHamiltonians:
  """Derive ``H_c`` from the schedule and ``H_s`` from the state; does not consume.

  When ``system_hamiltonian`` is given it is checked against the conditional states
  instead of being derived.
  """
  if schedule.generator is None:
    raise ScheduleError("the schedule is not generated by a single clock rotation")
  if not schedule.is_rank1:
    raise ScheduleError("Hamiltonian derivation needs rank-1 tick effects")
  psi = global_amplitudes(global_state)
  h_c = np.asarray(schedule.generator, dtype=complex)
  m = amplitude_matrix(psi)
  if abs(np.linalg.det(m)) < TOL.canonical:
    raise NonStationaryStateError("global state is not entangled; ticks carry no dynamics")

  pinned = system_hamiltonian is not None
  if pinned:
    h_s = np.asarray(system_hamiltonian, dtype=complex)
    if not is_hermitian(h_s):
      raise NonStationaryStateError("pinned system Hamiltonian is not Hermitian")
    _check_pinned(m, h_c, h_s, schedule)
  else:
    h_s = -m.T @ h_c.conj() @ np.linalg.inv(m.T)
    if not is_hermitian(h_s, TOL.fidelity):
      raise NonStationaryStateError("no Hermitian system Hamiltonian reproduces the ticks")
    h_s = (h_s + dagger(h_s)) / 2

  total = np.kron(h_c, I2) + np.kron(I2, h_s)
  image = total @ psi
  energy = float(np.real(np.vdot(psi, image)))
  residual = float(np.linalg.norm(image - energy * psi))
  if residual > TOL.fidelity:
    raise NonStationaryStateError(
      f"global state is not an eigenstate of H_c + H_s (residual {residual:.3e})")
  logger.debug(f"Derived Hamiltonians, E = {energy:.3e}, residual {residual:.3e}")
  return EffectiveHamiltonians(h_c, h_s, energy, residual, pinned)
