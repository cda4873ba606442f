"""Braid generators as unitaries on fusion spaces.

Generators are derived on the left-to-right chain basis
``x0 = vac, x1 = sigma, x2, ..., xn = total`` where ``xk`` is the charge of the first
k anyons. Exchanging anyons i and i+1 is diagonal with phase ``R_c`` when only one
intermediate charge fits between ``x(i-1)`` and ``x(i+1)`` (c is then fixed by
``x(i+1) in x(i-1) x c``) and otherwise acts on that 2x2 block as ``F^dag R F``.

On six anyons the chain labels ``(x2, x4)`` coincide with the two-triple labels
``(a, a')``: the remaining F-moves between the shapes act on one-dimensional blocks
with value 1 for SU(2)_2 and its Ising variant.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple
import logging

import numpy as np

from ..core.linalg import KET0, KET1, dagger, require_unitary
from ..errors import AnyonChronosError, BraidWordError, DimensionMismatchError, ModelError
from ..fusion.basis import FusionBasis, qubit_basis
from ..io.schema import ValidationReport
from ..model.anyons import AnyonLabel, AnyonModelSpec
from ..settings import TOL
from .words import BraidWord

logger = logging.getLogger(__name__)

# anyons (1 2) pair up across the clock triple and (5 6) across the system triple
BELL_PAIR_WORD = "s2 s4 s3"

# exchanges realising sqrt(P) per pair of the three-sigma qubit
PAIR_EXCHANGE_WORDS = {(1, 2): "s1", (2, 3): "s2", (1, 3): "s2 s1 S2"}


@dataclass(frozen=True, eq=False)
class GateMatrix:
  entries: np.ndarray = field(repr=False)
  label: str = ""

  def __post_init__(self):
    object.__setattr__(self, "entries", require_unitary(self.entries, self.label or "gate"))

  @property
  def dim(self) -> int:
    return self.entries.shape[0]

  def dagger(self) -> "GateMatrix":
    return GateMatrix(dagger(self.entries), f"({self.label})^-1" if self.label else "")

  def __matmul__(self, other):
    if isinstance(other, GateMatrix):
      label = " ".join(filter(None, [other.label, self.label]))
      return GateMatrix(self.entries @ other.entries, label)
    return self.entries @ np.asarray(other)

  def __array__(self, dtype=None, copy=None):
    return self.entries if dtype is None else self.entries.astype(dtype)


ChainState = Tuple[AnyonLabel, ...]


def _chain_states(model: AnyonModelSpec, n_anyons: int, total: AnyonLabel) -> List[ChainState]:
  sigma = model.label("sigma")
  chains: List[ChainState] = [(model.vacuum,)]
  for _ in range(n_anyons):
    chains = [c + (x,) for c in chains for x in model.fuse(c[-1], sigma)]
  return [c for c in chains if c[-1] == total]


def _chain_key(chain: ChainState) -> Tuple[AnyonLabel, ...]:
  return tuple(chain[k] for k in range(2, len(chain) - 1, 2))


def generator_matrix(model: AnyonModelSpec, basis: FusionBasis, i: int) -> GateMatrix:
  """Unitary for the over-crossing of strands i and i+1 on ``basis``."""
  n = basis.n_anyons
  if not 1 <= i < n:
    raise BraidWordError(f"generator {i} out of range for {n} anyons")
  sigma = model.label("sigma")
  index = {state: k for k, state in enumerate(basis.basis_states)}
  chains = _chain_states(model, n, basis.total_charge)
  if set(index) != {_chain_key(c) for c in chains}:
    raise ModelError(f"model {model.name}: chain labels do not match the {n}-sigma basis")

  f, r = model.f_matrix, model.r_matrix
  block = dagger(f) @ r @ f
  g = np.zeros((basis.dim, basis.dim), dtype=complex)
  for chain in chains:
    col = index[_chain_key(chain)]
    left, mid, right = chain[i - 1], chain[i], chain[i + 1]
    mids = [c for c in model.fuse(left, sigma) if right in model.fuse(c, sigma)]
    if len(mids) > 1:
      for other in mids:
        image = chain[:i] + (other,) + chain[i + 1:]
        row = index[_chain_key(image)]
        g[row, col] = block[model.channel_index(other), model.channel_index(mid)]
    else:
      pair = [c for c in model.channels if right in model.fuse(left, c)]
      if len(pair) != 1:
        raise ModelError(f"model {model.name}: ambiguous pair channel between {left} and {right}")
      g[col, col] = model.r_phase(pair[0])
  return GateMatrix(g, f"s{i}")


def generators(model: AnyonModelSpec, basis: FusionBasis) -> Dict[int, GateMatrix]:
  return {i: generator_matrix(model, basis, i) for i in range(1, basis.n_anyons)}


def evaluate_braid(word: BraidWord, model: AnyonModelSpec, basis: FusionBasis) -> GateMatrix:
  """Ordered product of generators; under-crossings use the inverse generator."""
  if word.n_strands != basis.n_anyons:
    raise BraidWordError(f"word on {word.n_strands} strands applied to {basis.n_anyons} anyons")
  gens: Dict[int, GateMatrix] = {}
  u = np.eye(basis.dim, dtype=complex)
  for c in word.crossings:
    if c.index not in gens:
      gens[c.index] = generator_matrix(model, basis, c.index)
    g = gens[c.index].entries
    u = (g if c.over else dagger(g)) @ u
  return GateMatrix(u, str(word))


def verify_braid_relations(model: AnyonModelSpec, basis: FusionBasis) -> ValidationReport:
  """Yang-Baxter for adjacent generators and commutation for distant ones."""
  report = ValidationReport(subject=f"braid relations, {model.name}, {basis.n_anyons} sigmas")
  if basis.n_anyons < 3:
    raise DimensionMismatchError("braid relations need at least three strands")
  try:
    gens = {i: g.entries for i, g in generators(model, basis).items()}
  except AnyonChronosError as e:
    report.add("generators_unitary", False, str(e))
    return report
  report.add("generators_unitary", True)

  tol = TOL.unitary
  for i in gens:
    for j in gens:
      if j == i + 1:
        a, b = gens[i], gens[j]
        err = float(np.max(np.abs(a @ b @ a - b @ a @ b)))
        report.add(f"yang_baxter_{i}_{j}", err < tol, f"max deviation {err:.3e}")
      elif j >= i + 2:
        a, b = gens[i], gens[j]
        err = float(np.max(np.abs(a @ b - b @ a)))
        report.add(f"far_commute_{i}_{j}", err < tol, f"max deviation {err:.3e}")
  return report


def y_basis(model: AnyonModelSpec) -> Dict[str, np.ndarray]:
  """``|+i> = e^{i pi/4} B|1>`` and ``|-i> = e^{-i pi/4} B|0>`` with B the (2 3) exchange."""
  b = generator_matrix(model, qubit_basis(model), 2).entries
  return {
    "+i": np.exp(0.25j * np.pi) * (b @ KET1),
    "-i": np.exp(-0.25j * np.pi) * (b @ KET0),
  }


def pair_exchange(model: AnyonModelSpec, pair: Tuple[int, int]) -> GateMatrix:
  """Exchange of an anyon pair of the three-sigma qubit."""
  key = tuple(sorted(pair))
  if key not in PAIR_EXCHANGE_WORDS:
    raise BraidWordError(f"no exchange defined for pair {pair}")
  return evaluate_braid(BraidWord.parse(PAIR_EXCHANGE_WORDS[key], 3), model, qubit_basis(model))
