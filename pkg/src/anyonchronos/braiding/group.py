"""Finite groups generated by braid gates, modulo global phase."""
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from ..core.linalg import I2, X, Y, Z, embed
from ..core.phase import PhaseKey, canonical_phase, phase_key
from ..errors import ClosureLimitError, DimensionMismatchError
from ..fusion.basis import qubit_basis, two_triple_basis
from ..fusion.state import StateVector
from ..model.anyons import AnyonModelSpec
from ..settings import default_config
from .generators import GateMatrix, generator_matrix, pair_exchange

logger = logging.getLogger(__name__)

SQRT_PAULIS = {name: (I2 - 1j * p) / np.sqrt(2) for name, p in (("X", X), ("Y", Y), ("Z", Z))}
SQRT_PAULI_PAIRS = {"Z": (1, 2), "X": (2, 3), "Y": (1, 3)}


@dataclass(frozen=True, eq=False)
class PhaseCanonicalGate:
  """A unitary with its global phase fixed; equality and hashing go through ``key``."""
  matrix: np.ndarray = field(repr=False)
  key: PhaseKey = field(repr=False)

  @classmethod
  def of(cls, matrix) -> "PhaseCanonicalGate":
    m = canonical_phase(np.asarray(matrix, dtype=complex))
    return cls(m, phase_key(m))

  @property
  def dim(self) -> int:
    return self.matrix.shape[0]

  def __eq__(self, other) -> bool:
    return isinstance(other, PhaseCanonicalGate) and self.key == other.key

  def __hash__(self) -> int:
    return hash(self.key)


def _as_matrix(g) -> np.ndarray:
  return g.entries if isinstance(g, GateMatrix) else np.asarray(g, dtype=complex)


def group_closure(
  generators: Sequence[Union[GateMatrix, np.ndarray]],
  max_size: Optional[int] = None,
) -> Tuple[PhaseCanonicalGate, ...]:
  """Breadth-first closure under left multiplication by the generators.

  Returns the elements ordered by canonical key. Raises ``ClosureLimitError`` once
  more than ``max_size`` distinct elements have been seen.
  """
  if max_size is None:
    max_size = default_config().closure_max_size
  gens = [_as_matrix(g) for g in generators]
  if not gens:
    raise DimensionMismatchError("closure needs at least one generator")
  dim = gens[0].shape[0]
  if any(g.shape != (dim, dim) for g in gens):
    raise DimensionMismatchError("generators of different dimension")

  identity = PhaseCanonicalGate.of(np.eye(dim))
  seen: Dict[PhaseKey, PhaseCanonicalGate] = {identity.key: identity}
  frontier = deque([identity])
  while frontier:
    g = frontier.popleft()
    for h in gens:
      product = PhaseCanonicalGate.of(h @ g.matrix)
      if product.key in seen:
        continue
      seen[product.key] = product
      if len(seen) > max_size:
        raise ClosureLimitError(f"closure exceeded {max_size} elements")
      frontier.append(product)
  logger.info(f"Closure of {len(gens)} generators on dim {dim}: {len(seen)} elements")
  return tuple(seen[k] for k in sorted(seen))


def _amplitudes(state) -> np.ndarray:
  if isinstance(state, StateVector):
    return state.amplitudes
  return np.asarray(state, dtype=complex).reshape(-1)


def reachable_states(
  start: Union[StateVector, np.ndarray],
  group: Iterable[PhaseCanonicalGate],
) -> Tuple[np.ndarray, ...]:
  """Orbit of ``start`` under ``group``, as phase-canonical vectors ordered by key."""
  v = _amplitudes(start)
  orbit: Dict[PhaseKey, np.ndarray] = {}
  for g in group:
    if g.dim != v.shape[0]:
      raise DimensionMismatchError(f"gate of dim {g.dim} on a state of dim {v.shape[0]}")
    w = canonical_phase(g.matrix @ v)
    orbit.setdefault(phase_key(w), w)
  return tuple(orbit[k] for k in sorted(orbit))


def braid_gate_set(model: AnyonModelSpec, n_qubits: int) -> List[np.ndarray]:
  """Braid-induced gates on ``n_qubits`` encoded qubits.

  Each qubit gets the two generators of its own triple, and every neighbouring pair of
  qubits gets the cross-triple exchange of the six-sigma representation.
  """
  if n_qubits < 1:
    raise DimensionMismatchError("at least one qubit is required")
  single = [generator_matrix(model, qubit_basis(model), i).entries for i in (1, 2)]
  gates = [embed(g, [q], n_qubits) for q in range(n_qubits) for g in single]
  if n_qubits > 1:
    cross = generator_matrix(model, two_triple_basis(model), 3).entries
    gates += [embed(cross, [q, q + 1], n_qubits) for q in range(n_qubits - 1)]
  return gates


def stabilizer_states(model: AnyonModelSpec, n_qubits: int) -> Tuple[np.ndarray, ...]:
  """Breadth-first orbit of ``|0...0>`` under the braid gate set, modulo phase."""
  gates = braid_gate_set(model, n_qubits)
  start = np.zeros(2 ** n_qubits, dtype=complex)
  start[0] = 1.0
  start = canonical_phase(start)
  seen: Dict[PhaseKey, np.ndarray] = {phase_key(start): start}
  frontier = deque([start])
  while frontier:
    v = frontier.popleft()
    for g in gates:
      w = canonical_phase(g @ v)
      k = phase_key(w)
      if k not in seen:
        seen[k] = w
        frontier.append(w)
  logger.info(f"Stabilizer orbit on {n_qubits} qubits: {len(seen)} states")
  return tuple(seen[k] for k in sorted(seen))


def identify_sqrt_paulis(
  closure: Iterable[PhaseCanonicalGate],
  model: Optional[AnyonModelSpec] = None,
) -> Dict[str, dict]:
  """Locate sqrt(X), sqrt(Y), sqrt(Z) in a single-qubit closure.

  With a model, also report whether the exchange of the matching anyon pair equals the
  gate up to phase.
  """
  members = {g.key: g for g in closure}
  found: Dict[str, dict] = {}
  for name, target in SQRT_PAULIS.items():
    gate = members.get(PhaseCanonicalGate.of(target).key)
    entry = {"pair": SQRT_PAULI_PAIRS[name], "in_closure": gate is not None}
    if model is not None:
      exchange = PhaseCanonicalGate.of(pair_exchange(model, SQRT_PAULI_PAIRS[name]).entries)
      entry["exchange_matches"] = exchange.key == PhaseCanonicalGate.of(target).key
    found[name] = entry
  return found
