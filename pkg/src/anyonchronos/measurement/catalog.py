"""Catalog of clock effects reachable with braid-generated circuits.

A circuit ``U`` on the clock and m ancillas yields the rank-1 effects
``|w_z><w_z|`` with ``(w_z)_c = <c, a| U^dag |z>``. Ranging ``U`` over the braid
group is the same as ranging ``U^dag |z>`` over the stabilizer states, which is
how ``method="stabilizer"`` avoids the full group for two ancillas.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple
import logging

import numpy as np

from ..braiding.group import braid_gate_set, group_closure, stabilizer_states
from ..core.linalg import equatorial_angle, kron_all
from ..core.phase import PhaseKey, array_key
from ..errors import DimensionMismatchError, ScaleGuardError
from ..model.anyons import AnyonModelSpec, su2_level2
from ..settings import TOL

logger = logging.getLogger(__name__)

MAX_ANCILLAS = 2
MAX_CLOSURE_ANCILLAS = 1
METHODS = ("closure", "stabilizer")
PREPARATIONS = ("zero", "stabilizer")

_AXES = {
  "+x": (1, 0, 0), "-x": (-1, 0, 0),
  "+y": (0, 1, 0), "-y": (0, -1, 0),
  "+z": (0, 0, 1), "-z": (0, 0, -1),
}


@dataclass(frozen=True, eq=False)
class CatalogEffect:
  """A tick direction: an effect normalized to unit trace."""
  label: str
  bloch: Tuple[float, float, float]
  angle: Optional[float]
  matrix: np.ndarray = field(repr=False)
  key: PhaseKey = field(repr=False)

  @property
  def equatorial(self) -> bool:
    return self.angle is not None


def _axis_label(bloch: np.ndarray) -> str:
  for name, axis in _AXES.items():
    if np.allclose(bloch, axis, atol=1e-6):
      return name
  return "(" + ",".join(f"{x:.3f}" for x in bloch) + ")"


def _direction_effect(d: np.ndarray, rho: np.ndarray, key: PhaseKey) -> CatalogEffect:
  bloch = np.array([2 * rho[0, 1].real, -2 * rho[0, 1].imag, (rho[0, 0] - rho[1, 1]).real])
  angle = equatorial_angle(d) if abs(bloch[2]) < TOL.canonical else None
  return CatalogEffect(_axis_label(bloch), tuple(float(x) for x in bloch), angle, rho, key)


@dataclass(frozen=True, eq=False)
class EffectCatalog:
  m: int
  method: str
  ancilla_preparation: str
  effects: Tuple[CatalogEffect, ...]
  max_ticks_per_povm: Optional[int] = None

  @property
  def n_distinct(self) -> int:
    return len(self.effects)

  @property
  def equatorial(self) -> Tuple[CatalogEffect, ...]:
    return tuple(e for e in self.effects if e.equatorial)

  @property
  def n_equatorial_rank1(self) -> int:
    return len(self.equatorial)

  @property
  def n_max(self) -> int:
    return self.n_equatorial_rank1

  @property
  def delta_tau(self) -> Optional[float]:
    return 2 * np.pi / self.n_max if self.n_max else None

  def keys(self) -> frozenset:
    return frozenset(e.key for e in self.effects)

  def to_document(self) -> dict:
    return {
      "ancilla": self.m,
      "method": self.method,
      "ancilla_preparation": self.ancilla_preparation,
      "n_distinct": self.n_distinct,
      "n_equatorial_rank1": self.n_equatorial_rank1,
      "n_max": self.n_max,
      "delta_tau": self.delta_tau,
      "max_ticks_per_povm": self.max_ticks_per_povm,
      "equatorial_ticks": [e.angle for e in self.equatorial],
      "effects": [
        {"outcome": e.label, "bloch": list(e.bloch), "angle": e.angle, "matrix": e.matrix}
        for e in self.effects
      ],
    }


def ancilla_preparations(model: AnyonModelSpec, m: int, preparation: str) -> List[np.ndarray]:
  if preparation not in PREPARATIONS:
    raise DimensionMismatchError(f"unknown ancilla preparation {preparation!r}")
  if m == 0:
    return [np.ones(1, dtype=complex)]
  if preparation == "zero":
    zero = np.zeros(2 ** m, dtype=complex)
    zero[0] = 1.0
    return [zero]
  singles = stabilizer_states(model, 1)
  return [kron_all(combo) for combo in product(singles, repeat=m)]


def clock_embedding(ancilla: np.ndarray) -> np.ndarray:
  """Isometry ``|c> -> |c>|ancilla>`` with the clock as most significant qubit."""
  return np.kron(np.eye(2), ancilla.reshape(-1, 1))


def _collect(directions: Iterable[np.ndarray], into: Dict[PhaseKey, CatalogEffect]) -> int:
  """Add directions to the catalog; return the count of distinct equatorial ones seen."""
  equatorial = set()
  for w in directions:
    norm = np.linalg.norm(w)
    if norm <= TOL.canonical:
      continue
    d = w / norm
    rho = np.outer(d, d.conj())
    key = array_key(rho)
    effect = into.get(key)
    if effect is None:
      effect = into[key] = _direction_effect(d, rho, key)
    if effect.equatorial:
      equatorial.add(effect.key)
  return len(equatorial)


def _sorted(found: Dict[PhaseKey, CatalogEffect]) -> Tuple[CatalogEffect, ...]:
  return tuple(sorted(found.values(), key=lambda e: (e.angle is None, e.angle or 0.0, e.label)))


def enumerate_clifford_povms(
  m: int,
  model: Optional[AnyonModelSpec] = None,
  method: Optional[str] = None,
  ancilla_preparation: str = "zero",
  max_size: Optional[int] = None,
) -> EffectCatalog:
  """All distinct clock effects of braid-generated circuits on the clock and m ancillas."""
  if m < 0:
    raise DimensionMismatchError(f"ancilla count must be non-negative, got {m}")
  if m > MAX_ANCILLAS:
    raise ScaleGuardError(f"enumeration is limited to {MAX_ANCILLAS} ancillas, got {m}")
  model = model or su2_level2()
  method = method or ("closure" if m <= MAX_CLOSURE_ANCILLAS else "stabilizer")
  if method not in METHODS:
    raise DimensionMismatchError(f"unknown enumeration method {method!r}")
  if method == "closure" and m > MAX_CLOSURE_ANCILLAS:
    raise ScaleGuardError(f"full closure is limited to {MAX_CLOSURE_ANCILLAS} ancilla; "
                          "use the stabilizer method")
  preps = ancilla_preparations(model, m, ancilla_preparation)
  n = m + 1
  found: Dict[PhaseKey, CatalogEffect] = {}
  max_ticks = None

  if method == "closure":
    group = group_closure(braid_gate_set(model, n), max_size=max_size)
    max_ticks = 0
    for g in group:
      for a in preps:
        v = g.matrix @ clock_embedding(a)
        max_ticks = max(max_ticks, _collect(v.conj(), found))
  else:
    states = stabilizer_states(model, n)
    for a in preps:
      e = clock_embedding(a)
      _collect((e.conj().T @ phi for phi in states), found)

  catalog = EffectCatalog(m, method, ancilla_preparation, _sorted(found), max_ticks)
  logger.info(
    f"Catalog m={m} ({method}, {ancilla_preparation}): {catalog.n_distinct} effects, "
    f"{catalog.n_equatorial_rank1} equatorial")
  return catalog
