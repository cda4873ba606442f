"""Anyon theories as data: labels, fusion rules, F and R matrices.

The built-in SU(2)_2 model is read from ``config/models.yaml``; the Ising model
shares its F matrix and replaces R by ``i R^dagger``.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple
import logging

import numpy as np
from pydantic import BaseModel

from ..errors import ModelError
from ..settings import load_yaml

logger = logging.getLogger(__name__)


class FMatrixConfig(BaseModel):
  entries: List[List[int]]
  norm: int


class ModelConfig(BaseModel):
  name: str
  labels: Optional[List[str]] = None
  vacuum: Optional[str] = None
  fusion: Optional[List[Tuple[str, str, str]]] = None
  channels: Optional[List[str]] = None
  f_matrix: Optional[FMatrixConfig] = None
  r_quarter_turns: Optional[List[int]] = None
  variant_of: Optional[str] = None


@dataclass(frozen=True)
class AnyonLabel:
  id: int
  name: str

  def __str__(self) -> str:
    return self.name


@dataclass(frozen=True)
class FusionRuleTable:
  """Multiplicity-free fusion: ``(a, b, c)`` is present iff ``c`` is in ``a x b``."""
  triples: FrozenSet[Tuple[int, int, int]]

  def allowed(self, a: AnyonLabel, b: AnyonLabel, c: AnyonLabel) -> bool:
    return (a.id, b.id, c.id) in self.triples

  def outcome_ids(self, a: int, b: int) -> List[int]:
    return sorted(c for (x, y, c) in self.triples if x == a and y == b)


@dataclass(frozen=True, eq=False)
class AnyonModelSpec:
  name: str
  labels: Tuple[AnyonLabel, ...]
  rules: FusionRuleTable
  vacuum_id: int
  channels: Tuple[AnyonLabel, ...]
  f_matrix: np.ndarray = field(repr=False)
  r_matrix: np.ndarray = field(repr=False)

  @property
  def vacuum(self) -> AnyonLabel:
    return self.labels[self.vacuum_id]

  def label(self, name: str) -> AnyonLabel:
    for lab in self.labels:
      if lab.name == name:
        return lab
    raise ModelError(f"model {self.name} has no label {name!r}")

  def fuse(self, a: AnyonLabel, b: AnyonLabel) -> List[AnyonLabel]:
    return [self.labels[c] for c in self.rules.outcome_ids(a.id, b.id)]

  def channel_index(self, c: AnyonLabel) -> int:
    return self.channels.index(c)

  def r_phase(self, c: AnyonLabel) -> complex:
    """Exchange phase of two sigmas fusing to channel ``c``."""
    i = self.channel_index(c)
    return complex(self.r_matrix[i, i])

  def to_document(self) -> dict:
    def pairs(m):
      return [[[float(z.real), float(z.imag)] for z in row] for row in m]

    triples = sorted(self.rules.triples)
    return {
      "name": self.name,
      "labels": [lab.name for lab in self.labels],
      "fusion_triples": [[self.labels[a].name, self.labels[b].name, self.labels[c].name]
                         for a, b, c in triples],
      "channels": [c.name for c in self.channels],
      "f_matrix": pairs(self.f_matrix),
      "r_matrix": pairs(self.r_matrix),
    }


def build_model(
  name: str,
  labels: List[str],
  vacuum: str,
  fusion: List[Tuple[str, str, str]],
  channels: List[str],
  f_matrix: np.ndarray,
  r_matrix: np.ndarray,
) -> AnyonModelSpec:
  """Assemble a spec from names; fusion triples are symmetrized in (a, b)."""
  labs = tuple(AnyonLabel(i, n) for i, n in enumerate(labels))
  index: Dict[str, int] = {lab.name: lab.id for lab in labs}
  try:
    triples = set()
    for a, b, c in fusion:
      triples.add((index[a], index[b], index[c]))
      triples.add((index[b], index[a], index[c]))
    chans = tuple(labs[index[c]] for c in channels)
    vac = index[vacuum]
  except KeyError as e:
    raise ModelError(f"model {name}: unknown label {e.args[0]!r}") from None
  f = np.asarray(f_matrix, dtype=complex)
  r = np.asarray(r_matrix, dtype=complex)
  if f.shape != (len(chans), len(chans)) or r.shape != f.shape:
    raise ModelError(f"model {name}: F and R must be {len(chans)}x{len(chans)}")
  return AnyonModelSpec(name, labs, FusionRuleTable(frozenset(triples)), vac, chans, f, r)


def _from_config(cfg: ModelConfig) -> AnyonModelSpec:
  f = np.array(cfg.f_matrix.entries, dtype=complex) / np.sqrt(cfg.f_matrix.norm)
  r = np.diag([1j ** k for k in cfg.r_quarter_turns])
  return build_model(cfg.name, cfg.labels, cfg.vacuum, cfg.fusion, cfg.channels, f, r)


@lru_cache(maxsize=None)
def _model_configs() -> Dict[str, ModelConfig]:
  raw = load_yaml("models.yaml")["models"]
  return {k: ModelConfig(**v) for k, v in raw.items()}


def su2_level2() -> AnyonModelSpec:
  """SU(2)_2 with ``F = H`` and ``R = diag(1, i)``."""
  return _from_config(_model_configs()["su2_2"])


def ising_variant(base: Optional[AnyonModelSpec] = None) -> AnyonModelSpec:
  """Same F as SU(2)_2, ``R -> i R^dagger``, which gives ``diag(i, 1)``."""
  base = base or su2_level2()
  name = _model_configs()["ising"].name
  r = 1j * base.r_matrix.conj().T
  return AnyonModelSpec(name, base.labels, base.rules, base.vacuum_id, base.channels,
                        base.f_matrix.copy(), r)


MODEL_NAMES = ("su2_2", "ising")


def load_model(name: str) -> AnyonModelSpec:
  configs = _model_configs()
  if name not in configs:
    raise ModelError(f"unknown model {name!r}; choose one of {', '.join(MODEL_NAMES)}")
  cfg = configs[name]
  if cfg.variant_of:
    base = load_model(cfg.variant_of)
    if name == "ising":
      return ising_variant(base)
    raise ModelError(f"model {name}: unsupported variant of {cfg.variant_of}")
  logger.debug(f"Loaded model {cfg.name}")
  return _from_config(cfg)
