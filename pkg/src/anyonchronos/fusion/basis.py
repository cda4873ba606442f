"""Ordered fusion-tree bases for three and six sigma anyons.

Three sigmas with total charge sigma form one qubit: ``|a_Z>`` labels the charge
``a`` of anyons (1, 2). Six sigmas with total charge vac are split into a clock
triple (1, 2, 3) and a system triple (4, 5, 6), each of total charge sigma. The
system triple is the mirror image of the clock triple, so its encoded label is
the charge of the outer pair (5, 6). The computational basis is ``|a, a'>``.
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple, Union
import logging

from ..errors import DimensionMismatchError, EmptyBasisError, UnsupportedAnyonCountError
from ..model.anyons import AnyonLabel, AnyonModelSpec

logger = logging.getLogger(__name__)

SUPPORTED_ANYON_COUNTS = (3, 6)

# per triple: (encoded pair -> Z, inner pair -> X, outer pair -> Y)
CLOCK_PAIRS = {"Z": (1, 2), "X": (2, 3), "Y": (1, 3)}
SYSTEM_PAIRS = {"Z": (5, 6), "X": (4, 5), "Y": (4, 6)}


@dataclass(frozen=True)
class QubitEncoding:
  """Bijection between basis indices and computational bit strings."""
  bitstrings: Tuple[str, ...]

  def to_bits(self, index: int) -> str:
    return self.bitstrings[index]

  def from_bits(self, bits: str) -> int:
    if bits not in self.bitstrings:
      raise DimensionMismatchError(f"no basis state {bits!r}; expected one of {self.bitstrings}")
    return self.bitstrings.index(bits)


@dataclass(frozen=True)
class FusionBasis:
  model: AnyonModelSpec = field(repr=False, compare=False)
  n_anyons: int
  total_charge: AnyonLabel
  tree_shape: str
  basis_states: Tuple[Tuple[AnyonLabel, ...], ...]
  triples: Tuple[Tuple[int, int, int], ...]
  encoding: QubitEncoding

  @property
  def dim(self) -> int:
    return len(self.basis_states)

  @property
  def n_qubits(self) -> int:
    return len(self.triples)

  def triple_pairs(self, triple: int) -> Dict[str, Tuple[int, int]]:
    return CLOCK_PAIRS if triple == 0 else SYSTEM_PAIRS

  def describe(self) -> dict:
    return {
      "kind": "fusion",
      "model": self.model.name,
      "n_anyons": self.n_anyons,
      "total_charge": self.total_charge.name,
      "tree_shape": self.tree_shape,
      "states": [[lab.name for lab in s] for s in self.basis_states],
    }


@dataclass(frozen=True)
class QubitRegister:
  """Encoded register of ``n_qubits`` qubits, used for ancilla circuits."""
  n_qubits: int

  @property
  def dim(self) -> int:
    return 2 ** self.n_qubits

  @property
  def encoding(self) -> QubitEncoding:
    return QubitEncoding(tuple(format(i, f"0{self.n_qubits}b") for i in range(self.dim)))

  def describe(self) -> dict:
    return {"kind": "register", "n_qubits": self.n_qubits}


Basis = Union[FusionBasis, QubitRegister]


def _triple_labels(model: AnyonModelSpec) -> list:
  """Encoded-pair charges ``a`` of a sigma triple with total charge sigma."""
  sigma = model.label("sigma")
  return [a for a in model.fuse(sigma, sigma) if sigma in model.fuse(a, sigma)]


def _bits(model: AnyonModelSpec, labels: Tuple[AnyonLabel, ...]) -> str:
  return "".join("0" if lab == model.vacuum else "1" for lab in labels)


def standard_basis(model: AnyonModelSpec, n_anyons: int, total_charge: AnyonLabel) -> FusionBasis:
  """Canonical basis, ordered lexicographically with vac before psi, clock labels first."""
  if n_anyons not in SUPPORTED_ANYON_COUNTS:
    raise UnsupportedAnyonCountError(
      f"{n_anyons} anyons requested; supported counts are {SUPPORTED_ANYON_COUNTS}")
  sigma = model.label("sigma")
  if n_anyons == 3:
    states = [(a,) for a in model.fuse(sigma, sigma) if total_charge in model.fuse(a, sigma)]
    shape = "((1 2)_a 3)"
    triples = ((1, 2, 3),)
  else:
    labels = _triple_labels(model)
    ok = total_charge == model.vacuum and total_charge in model.fuse(sigma, sigma)
    states = [(a, b) for a in labels for b in labels] if ok else []
    shape = "((1 2)_a 3)_sigma (4 (5 6)_a')_sigma"
    triples = ((1, 2, 3), (4, 5, 6))
  if not states:
    raise EmptyBasisError(
      f"no admissible labelling of {n_anyons} sigmas with total charge {total_charge.name}")
  states = sorted(states, key=lambda s: tuple(lab.id for lab in s))
  encoding = QubitEncoding(tuple(_bits(model, s) for s in states))
  logger.debug(f"Built {n_anyons}-sigma basis of dim {len(states)} for {model.name}")
  return FusionBasis(model, n_anyons, total_charge, shape, tuple(states), triples, encoding)


def qubit_basis(model: AnyonModelSpec) -> FusionBasis:
  return standard_basis(model, 3, model.label("sigma"))


def two_triple_basis(model: AnyonModelSpec) -> FusionBasis:
  return standard_basis(model, 6, model.vacuum)
