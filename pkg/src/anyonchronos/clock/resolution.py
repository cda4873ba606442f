"""Clock time resolution per gate class and ancilla count."""
from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from ..errors import DimensionMismatchError, ScaleGuardError
from ..measurement.catalog import MAX_ANCILLAS, EffectCatalog, enumerate_clifford_povms
from ..measurement.povm import (
  covariant_equatorial_povm,
  equatorial_tick_count,
  naimark_dilation,
  povm_from_circuit,
)
from ..model.anyons import AnyonModelSpec

logger = logging.getLogger(__name__)

GATE_CLASSES = ("clifford", "universal")


def ancilla_resolution_floor(d: int, k: int) -> float:
  """``2 pi / d^(k+1)``: the finest tick spacing k qudit ancillas of dimension d allow."""
  if d < 2:
    raise DimensionMismatchError(f"qudit dimension must be at least 2, got {d}")
  if k < 0:
    raise DimensionMismatchError(f"ancilla count must be non-negative, got {k}")
  return 2 * np.pi / d ** (k + 1)


@dataclass(frozen=True)
class ResolutionReport:
  gates: str
  ancilla: int
  n_ticks: int
  delta_tau: float
  ancilla_floor: float
  effective_delta_tau: float
  n_max_source: str

  def to_document(self) -> dict:
    return {
      "gates": self.gates,
      "ancilla": self.ancilla,
      "n_ticks": self.n_ticks,
      "delta_tau": self.delta_tau,
      "ancilla_floor": self.ancilla_floor,
      "effective_delta_tau": self.effective_delta_tau,
      "n_max_source": self.n_max_source,
    }


def _universal_ticks(m: int) -> int:
  """Realise the covariant 2^(m+1)-outcome POVM as a circuit and count its ticks."""
  effects = covariant_equatorial_povm(2 ** (m + 1))
  circuit = naimark_dilation(effects, m)
  return equatorial_tick_count(povm_from_circuit(circuit, m))


def time_resolution(
  gates: str,
  m: int,
  model: Optional[AnyonModelSpec] = None,
  catalog: Optional[EffectCatalog] = None,
) -> ResolutionReport:
  """Tick spacing ``2 pi / N`` for the largest tick count ``N`` the gate class reaches.

  For braid-generated (Clifford) circuits ``N`` is the enumerated count of equatorial
  effect directions, not a quoted value.
  """
  if gates not in GATE_CLASSES:
    raise DimensionMismatchError(f"unknown gate class {gates!r}")
  floor = ancilla_resolution_floor(2, m)
  if gates == "universal":
    n = _universal_ticks(m)
    source = "covariant dilation"
  else:
    if m > MAX_ANCILLAS:
      raise ScaleGuardError(f"Clifford resolution is enumerated up to {MAX_ANCILLAS} ancillas")
    catalog = catalog or enumerate_clifford_povms(m, model)
    n = catalog.n_max
    source = f"enumerated ({catalog.method})"
  delta = 2 * np.pi / n
  logger.info(f"Resolution {gates} m={m}: N={n}, delta_tau={delta:.6f}")
  return ResolutionReport(gates, m, n, delta, floor, max(delta, floor), source)
