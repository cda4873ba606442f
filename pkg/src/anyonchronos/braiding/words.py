"""Braid words: ``s<i>`` is an over-crossing of strands i and i+1, ``S<i>`` its inverse."""
from dataclasses import dataclass
from typing import Tuple
import re

from ..errors import BraidWordError

_TOKEN = re.compile(r"^([sS])(\d+)$")


@dataclass(frozen=True)
class Crossing:
  index: int
  over: bool = True

  def __str__(self) -> str:
    return f"{'s' if self.over else 'S'}{self.index}"


@dataclass(frozen=True)
class BraidWord:
  """Crossings in time order: the first crossing acts first on a state."""
  n_strands: int
  crossings: Tuple[Crossing, ...] = ()

  def __post_init__(self):
    if self.n_strands < 2:
      raise BraidWordError(f"a braid needs at least two strands, got {self.n_strands}")
    for c in self.crossings:
      if not 1 <= c.index < self.n_strands:
        raise BraidWordError(f"crossing {c} out of range for {self.n_strands} strands")

  @classmethod
  def parse(cls, text: str, n_strands: int) -> "BraidWord":
    crossings = []
    for token in text.split():
      match = _TOKEN.match(token)
      if not match:
        raise BraidWordError(f"bad braid token {token!r}; expected s<i> or S<i>")
      crossings.append(Crossing(int(match.group(2)), match.group(1) == "s"))
    return cls(n_strands, tuple(crossings))

  def inverse(self) -> "BraidWord":
    flipped = tuple(Crossing(c.index, not c.over) for c in reversed(self.crossings))
    return BraidWord(self.n_strands, flipped)

  def __len__(self) -> int:
    return len(self.crossings)

  def __str__(self) -> str:
    return " ".join(str(c) for c in self.crossings)
