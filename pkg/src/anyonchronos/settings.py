"""Packaged defaults and experiment configuration."""

from contextlib import contextmanager
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Literal, Optional

import yaml
from pydantic import BaseModel, Field

CONFIG_DIR = Path(__file__).parent / "config"


class Tolerances(BaseModel):
  unitary: float = 1e-10
  norm: float = 1e-10
  canonical: float = 1e-8
  completeness: float = 1e-9
  psd: float = 1e-10
  fidelity: float = 1e-10
  probability_floor: float = 1e-14


class ExperimentConfig(BaseModel):
  model: Literal["su2_2", "ising"] = "su2_2"
  format: Literal["json", "csv"] = "json"
  tolerances: Tolerances = Field(default_factory=Tolerances)
  closure_max_size: int = 1_000_000
  ticks: Optional[int] = None
  ancilla: Optional[int] = None
  output: Optional[str] = None

  def with_overrides(self, **overrides) -> "ExperimentConfig":
    """Return a copy with every non-None override applied."""
    data = self.model_dump()
    tol = data["tolerances"]
    for key, value in overrides.items():
      if value is None:
        continue
      if key in tol:
        tol[key] = value
      else:
        data[key] = value
    return ExperimentConfig(**data)


def load_yaml(name: str) -> dict:
  return yaml.safe_load((CONFIG_DIR / name).read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def default_config() -> ExperimentConfig:
  return ExperimentConfig(**load_yaml("defaults.yaml"))


def load_config(path: Optional[str]) -> ExperimentConfig:
  """Packaged defaults, overlaid with a user YAML file when given."""
  base = default_config().model_dump()
  if path:
    user = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    tol = {**base["tolerances"], **(user.pop("tolerances", None) or {})}
    base.update(user)
    base["tolerances"] = tol
  return ExperimentConfig(**base)


TOL = default_config().tolerances


@contextmanager
def use_tolerances(tolerances: Tolerances) -> Iterator[Tolerances]:
  """Temporarily replace the shared tolerances in place."""
  saved = TOL.model_dump()
  for key, value in tolerances.model_dump().items():
    setattr(TOL, key, value)
  try:
    yield TOL
  finally:
    for key, value in saved.items():
      setattr(TOL, key, value)
