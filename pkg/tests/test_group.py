import numpy as np
import pytest

from anyonchronos.braiding import (
  PhaseCanonicalGate,
  group_closure,
  identify_sqrt_paulis,
  reachable_states,
  stabilizer_states,
)
from anyonchronos.braiding.generators import generators
from anyonchronos.braiding.group import braid_gate_set
from anyonchronos.core.linalg import KET0, bloch_vector
from anyonchronos.core.phase import canonical_phase, phase_key
from anyonchronos.core.rng import RNG
from anyonchronos.errors import ClosureLimitError, DimensionMismatchError
from anyonchronos.fusion import qubit_basis, two_triple_basis
from anyonchronos.model import ising_variant, su2_level2


def _single_qubit_closure(spec):
  return group_closure(list(generators(spec, qubit_basis(spec)).values()))


def test_three_sigma_closure_is_the_clifford_group():
  for spec in (su2_level2(), ising_variant()):
    assert len(_single_qubit_closure(spec)) == 24


def test_six_sigma_closure_is_the_two_qubit_clifford_group():
  spec = su2_level2()
  group = group_closure(list(generators(spec, two_triple_basis(spec)).values()))
  assert len(group) == 11520


def test_closure_is_ordered_and_phase_free():
  group = _single_qubit_closure(su2_level2())
  keys = [g.key for g in group]
  assert keys == sorted(keys)
  assert len(set(group)) == len(group)
  assert PhaseCanonicalGate.of(np.eye(2)) in group
  assert PhaseCanonicalGate.of(1j * np.eye(2)) == PhaseCanonicalGate.of(np.eye(2))


def test_closure_limit():
  gens = list(generators(su2_level2(), qubit_basis(su2_level2())).values())
  with pytest.raises(ClosureLimitError):
    group_closure(gens, max_size=10)
  with pytest.raises(DimensionMismatchError):
    group_closure([])
  with pytest.raises(DimensionMismatchError):
    group_closure([np.eye(2), np.eye(4)])


def test_orbit_of_zero_is_six_stabilizer_states():
  orbit = reachable_states(KET0, _single_qubit_closure(su2_level2()))
  assert len(orbit) == 6
  blochs = [bloch_vector(v) for v in orbit]
  equatorial = [b for b in blochs if abs(b[2]) < 1e-9]
  assert len(equatorial) == 4
  for b in blochs:
    assert np.isclose(np.max(np.abs(b)), 1.0)


def test_stabilizer_state_counts():
  spec = su2_level2()
  assert len(stabilizer_states(spec, 1)) == 6
  assert len(stabilizer_states(spec, 2)) == 60
  assert len(stabilizer_states(spec, 3)) == 1080


def test_braid_gate_set_shapes():
  spec = su2_level2()
  assert len(braid_gate_set(spec, 1)) == 2
  gates = braid_gate_set(spec, 3)
  assert len(gates) == 8
  assert all(g.shape == (8, 8) for g in gates)
  with pytest.raises(DimensionMismatchError):
    braid_gate_set(spec, 0)


def test_sqrt_paulis_in_closure():
  spec = su2_level2()
  found = identify_sqrt_paulis(_single_qubit_closure(spec), spec)
  assert set(found) == {"X", "Y", "Z"}
  assert found["X"]["pair"] == (2, 3)
  assert found["Y"]["pair"] == (1, 3)
  assert found["Z"]["pair"] == (1, 2)
  for entry in found.values():
    assert entry["in_closure"]
    assert entry["exchange_matches"]


def test_reachable_states_checks_dimension():
  spec = su2_level2()
  with pytest.raises(DimensionMismatchError):
    reachable_states(np.array([1, 0, 0, 0]), _single_qubit_closure(spec))


def test_phase_canonicalization_is_phase_invariant():
  rng = RNG.from_env()
  thetas = [0.3, 1.7, np.pi]
  for g in _single_qubit_closure(su2_level2()):
    assert np.allclose(canonical_phase(g.matrix), g.matrix)
    for phase in [np.exp(1j * t) for t in thetas] + [rng.phase()]:
      assert PhaseCanonicalGate.of(phase * g.matrix) == g
      assert phase_key(phase * g.matrix) == g.key


def test_clifford_closure_is_closed_under_product_and_inverse():
  group = _single_qubit_closure(su2_level2())
  keys = {g.key for g in group}
  for a in group:
    assert PhaseCanonicalGate.of(a.matrix.conj().T).key in keys
    for b in group:
      assert PhaseCanonicalGate.of(a.matrix @ b.matrix).key in keys


def test_trivial_and_infinite_generators():
  trivial = group_closure([np.eye(2)])
  assert len(trivial) == 1
  orbit = reachable_states(KET0, trivial)
  assert len(orbit) == 1
  assert np.allclose(orbit[0], KET0)
  with pytest.raises(ClosureLimitError):
    group_closure([np.diag([1, np.exp(0.1j)])], max_size=100)
