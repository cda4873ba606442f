"""Clock tick states and ordered tick schedules.

Ticks are indexed ``tau_j = j``. A schedule generated by ``H_c`` has
``|tau_j> = exp(-i H_c j)|tau_0>``; for the equatorial schedule
``H_c = -pi Z / N`` and ``|tau_j> = rot_z(2 pi j / N)|+>``.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np
from scipy.linalg import expm

from ..core.linalg import Z, dagger, equatorial_ket, is_hermitian, require_unitary
from ..errors import ScheduleError
from ..fusion.basis import QubitRegister
from ..fusion.state import StateVector
from ..measurement.povm import PovmEffect, check_povm, covariant_equatorial_povm
from ..settings import TOL

logger = logging.getLogger(__name__)

CLOCK_REGISTER = QubitRegister(1)


def tick_angle(j: int, n: int) -> float:
  return 2 * np.pi * j / n


def tick_state(j: int, n: int) -> StateVector:
  """``rot_z(2 pi j / N)|+>`` on the clock qubit."""
  if n < 2:
    raise ScheduleError(f"a clock needs at least 2 ticks, got {n}")
  if not 0 <= j < n:
    raise ScheduleError(f"tick {j} out of range for {n} ticks")
  return StateVector(CLOCK_REGISTER, equatorial_ket(tick_angle(j, n)))


@dataclass(frozen=True, eq=False)
class ClockSchedule:
  """Explicitly ordered clock effects; tick j is ``effects[j]``.

  ``generator`` is the clock Hamiltonian carrying tick j to tick j+1 in unit time, or
  ``None`` when the ticks are not the orbit of a single rotation.
  """
  effects: Tuple[PovmEffect, ...] = field(repr=False)
  angles: Tuple[Optional[float], ...]
  generator: Optional[np.ndarray] = field(default=None, repr=False)
  origin_index: int = 0

  def __post_init__(self):
    if len(self.effects) < 2:
      raise ScheduleError(f"a schedule needs at least 2 ticks, got {len(self.effects)}")
    if self.origin_index != 0:
      raise ScheduleError("schedules are stored with their origin first")
    check_povm(self.effects)

  @property
  def n_ticks(self) -> int:
    return len(self.effects)

  @property
  def tick_states(self) -> List[np.ndarray]:
    return [e.direction() for e in self.effects]

  @property
  def is_rank1(self) -> bool:
    return all(e.rank == 1 for e in self.effects)

  @classmethod
  def equatorial(cls, n: int) -> "ClockSchedule":
    if n < 2:
      raise ScheduleError(f"a clock needs at least 2 ticks, got {n}")
    effects = covariant_equatorial_povm(n)
    angles = tuple(tick_angle(j, n) for j in range(n))
    return cls(tuple(effects), angles, -np.pi * Z / n)

  @classmethod
  def from_generator(cls, h_c: np.ndarray, origin: np.ndarray, n: int) -> "ClockSchedule":
    """Ticks ``exp(-i H_c j)|origin>`` weighted ``2/N``; completeness is checked."""
    if n < 2:
      raise ScheduleError(f"a clock needs at least 2 ticks, got {n}")
    h_c = np.asarray(h_c, dtype=complex)
    if not is_hermitian(h_c):
      raise ScheduleError("clock generator is not Hermitian")
    step = expm(-1j * h_c)
    ket = np.asarray(origin, dtype=complex) / np.linalg.norm(origin)
    effects = []
    for j in range(n):
      effects.append(PovmEffect((2.0 / n) * np.outer(ket, ket.conj()), str(j)))
      ket = step @ ket
    return cls(tuple(effects), tuple(e.angle() for e in effects), h_c)

  @classmethod
  def from_povm(cls, effects: Sequence[PovmEffect], origin: int = 0) -> "ClockSchedule":
    """Order equatorial effects by angle, ascending from the effect at ``origin``.

    Zero effects are dropped. A generator is fitted when the angles are evenly spaced.
    """
    live = [e for e in effects if not e.is_zero]
    check_povm(live)
    if not 0 <= origin < len(live):
      raise ScheduleError(f"origin {origin} out of range for {len(live)} nonzero effects")
    angles = [e.angle() for e in live]
    if any(a is None for a in angles):
      raise ScheduleError("tick ordering needs rank-1 equatorial effects")
    start = angles[origin]
    order = sorted(range(len(live)), key=lambda k: (angles[k] - start) % (2 * np.pi))
    ordered = tuple(live[k] for k in order)
    rel = [(angles[k] - start) % (2 * np.pi) for k in order]
    n = len(ordered)
    steps = np.diff(rel + [2 * np.pi])
    generator = None
    if np.allclose(steps, 2 * np.pi / n, atol=TOL.canonical):
      generator = -np.pi * Z / n
    else:
      logger.warning(f"Tick angles of a {n}-outcome POVM are unevenly spaced; no generator")
    return cls(ordered, tuple(angles[k] for k in order), generator)

  def conjugated(self, c: np.ndarray) -> "ClockSchedule":
    """The same schedule seen through the clock unitary ``c``."""
    c = require_unitary(np.asarray(c, dtype=complex), "clock rotation")
    effects = tuple(PovmEffect(c @ e.matrix @ dagger(c), e.outcome_label) for e in self.effects)
    generator = None if self.generator is None else c @ self.generator @ dagger(c)
    return ClockSchedule(effects, tuple(e.angle() for e in effects), generator)
