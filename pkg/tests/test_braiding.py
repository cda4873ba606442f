import numpy as np
import pytest

from anyonchronos.braiding import (
  BraidWord,
  Crossing,
  evaluate_braid,
  generator_matrix,
  verify_braid_relations,
  y_basis,
)
from anyonchronos.braiding.generators import BELL_PAIR_WORD, pair_exchange
from anyonchronos.core.linalg import KET0, KET1, MINUS_I, PLUS_I
from anyonchronos.core.phase import equal_up_to_phase
from anyonchronos.errors import BraidWordError
from anyonchronos.fusion import qubit_basis, two_triple_basis
from anyonchronos.fusion.state import basis_state
from anyonchronos.model import ising_variant, su2_level2

B = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]]) / 2
R = np.diag([1, 1j])


def test_parse_and_print_words():
  word = BraidWord.parse("s2 s4 S3", 6)
  assert word.crossings == (Crossing(2), Crossing(4), Crossing(3, over=False))
  assert str(word) == "s2 s4 S3"
  assert str(word.inverse()) == "s3 S4 S2"
  assert len(BraidWord.parse("", 3)) == 0


def test_bad_words():
  with pytest.raises(BraidWordError):
    BraidWord.parse("s3", 3)
  with pytest.raises(BraidWordError):
    BraidWord.parse("x1", 3)
  with pytest.raises(BraidWordError):
    BraidWord.parse("s0", 3)
  with pytest.raises(BraidWordError):
    BraidWord(1)
  spec = su2_level2()
  with pytest.raises(BraidWordError):
    evaluate_braid(BraidWord.parse("s1", 6), spec, qubit_basis(spec))


def test_three_sigma_generators():
  spec = su2_level2()
  basis = qubit_basis(spec)
  assert np.allclose(generator_matrix(spec, basis, 1).entries, R)
  assert np.allclose(generator_matrix(spec, basis, 2).entries, B)


def test_six_sigma_generators():
  spec = su2_level2()
  basis = two_triple_basis(spec)
  i2 = np.eye(2)
  expected = {
    1: np.kron(R, i2),
    2: np.kron(B, i2),
    3: np.diag([1, 1j, 1j, 1]),
    4: np.kron(i2, B),
    5: np.kron(i2, R),
  }
  for i, g in expected.items():
    assert np.allclose(generator_matrix(spec, basis, i).entries, g), i


def test_braid_relations_hold():
  for spec in (su2_level2(), ising_variant()):
    for basis in (qubit_basis(spec), two_triple_basis(spec)):
      report = verify_braid_relations(spec, basis)
      assert report.passed, report.failed()
  spec = su2_level2()
  names = [c.name for c in verify_braid_relations(spec, two_triple_basis(spec)).checks]
  assert "yang_baxter_2_3" in names
  assert "far_commute_1_5" in names


def test_under_crossing_inverts():
  spec = su2_level2()
  basis = qubit_basis(spec)
  u = evaluate_braid(BraidWord.parse("s1 s2 S2 S1", 3), spec, basis)
  assert np.allclose(u.entries, np.eye(2))


def test_word_applies_in_time_order():
  spec = su2_level2()
  basis = qubit_basis(spec)
  u = evaluate_braid(BraidWord.parse("s1 s2", 3), spec, basis)
  assert np.allclose(u.entries, B @ R)


def test_y_basis_from_braids():
  ys = y_basis(su2_level2())
  assert np.allclose(ys["+i"], PLUS_I, atol=1e-12)
  assert np.allclose(ys["-i"], MINUS_I, atol=1e-12)


def test_braided_bell_pair():
  target = np.array([1, 1, 1, -1]) / 2
  for spec in (su2_level2(), ising_variant()):
    basis = two_triple_basis(spec)
    u = evaluate_braid(BraidWord.parse(BELL_PAIR_WORD, 6), spec, basis)
    out = u @ basis_state(basis, "00").amplitudes
    assert abs(np.vdot(target, out)) ** 2 > 1 - 1e-10


def test_pair_exchanges_are_square_roots_of_paulis():
  spec = su2_level2()
  x = np.array([[0, 1], [1, 0]])
  y = np.array([[0, -1j], [1j, 0]])
  z = np.diag([1, -1])
  for pair, p in (((1, 2), z), ((2, 3), x), ((1, 3), y)):
    g = pair_exchange(spec, pair).entries
    assert equal_up_to_phase(g, (np.eye(2) - 1j * p) / np.sqrt(2)), pair
    assert equal_up_to_phase(g @ g, p), pair
  with pytest.raises(BraidWordError):
    pair_exchange(spec, (1, 4))


def test_gate_matrix_composition():
  spec = su2_level2()
  basis = qubit_basis(spec)
  g1 = generator_matrix(spec, basis, 1)
  g2 = generator_matrix(spec, basis, 2)
  both = g2 @ g1
  assert both.label == "s1 s2"
  assert np.allclose(both.entries, B @ R)
  assert np.allclose((g1.dagger() @ g1).entries, np.eye(2))
  assert np.allclose(g1 @ KET1, 1j * KET1)
  assert np.allclose(np.asarray(g2) @ KET0, B[:, 0])
