import os
from dataclasses import dataclass

import numpy as np

SEED_ENV = "ANYON_CHRONOS_SEED"
DEFAULT_SEED = 7


@dataclass
class RNG:
  """Seeded source of random test states. The library itself is deterministic."""
  seed: int

  def __post_init__(self):
    self.np = np.random.default_rng(self.seed)

  @classmethod
  def from_env(cls) -> "RNG":
    return cls(int(os.environ.get(SEED_ENV, DEFAULT_SEED)))

  def state(self, dim: int = 2) -> np.ndarray:
    # Haar-random pure state: normalized complex Gaussian vector
    v = self.np.normal(size=dim) + 1j * self.np.normal(size=dim)
    return v / np.linalg.norm(v)

  def states(self, count: int, dim: int = 2) -> list:
    return [self.state(dim) for _ in range(count)]

  def phase(self) -> complex:
    return complex(np.exp(1j * self.np.uniform(0, 2 * np.pi)))
