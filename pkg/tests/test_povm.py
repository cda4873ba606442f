import numpy as np
import pytest

from anyonchronos.core.linalg import KET0, PLUS, projector
from anyonchronos.errors import DimensionMismatchError, NonUnitaryError, PovmError
from anyonchronos.measurement import (
  PovmEffect,
  covariant_equatorial_povm,
  naimark_dilation,
  povm_from_circuit,
)
from anyonchronos.measurement.povm import check_povm, equatorial_tick_count

H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


def _assert_valid(effects):
  total = sum(e.matrix for e in effects)
  assert np.max(np.abs(total - np.eye(2))) < 1e-9
  for e in effects:
    assert np.min(np.linalg.eigvalsh(e.matrix)) > -1e-10


def test_effect_geometry():
  e = PovmEffect(projector(PLUS), "+")
  assert e.rank == 1
  assert np.isclose(e.weight, 1.0)
  assert np.allclose(e.bloch(), [1, 0, 0])
  assert e.is_equatorial
  assert np.isclose(e.angle(), 0.0)
  z = PovmEffect(projector(KET0), "0")
  assert not z.is_equatorial
  assert z.angle() is None
  assert PovmEffect(np.zeros((2, 2)), "none").is_zero


def test_check_povm_rejects_bad_sets():
  with pytest.raises(PovmError):
    check_povm([])
  with pytest.raises(PovmError):
    check_povm([PovmEffect(projector(KET0), "0")])
  with pytest.raises(PovmError):
    check_povm([PovmEffect(np.diag([2.0, 1.0]), "a"), PovmEffect(np.diag([-1.0, 0.0]), "b")])
  with pytest.raises(DimensionMismatchError):
    check_povm([PovmEffect(np.eye(3), "a")])


def test_projective_readout_without_ancillas():
  effects = povm_from_circuit(H, 0)
  _assert_valid(effects)
  assert [e.outcome_label for e in effects] == ["0", "1"]
  assert np.allclose(effects[0].matrix, projector(PLUS))
  assert equatorial_tick_count(effects) == 2


def test_identity_circuit_reads_z():
  effects = povm_from_circuit(np.eye(2), 0)
  _assert_valid(effects)
  assert [e.outcome_label for e in effects] == ["0", "1"]
  assert np.allclose(effects[0].matrix, projector(KET0))
  assert np.allclose(effects[1].matrix, np.diag([0, 1]))
  assert equatorial_tick_count(effects) == 0


def test_circuit_shape_and_unitarity():
  with pytest.raises(DimensionMismatchError):
    povm_from_circuit(np.eye(2), 1)
  with pytest.raises(NonUnitaryError):
    povm_from_circuit(np.ones((2, 2)), 0)
  with pytest.raises(DimensionMismatchError):
    povm_from_circuit(np.eye(4), 1, ancilla_state=np.ones(4) / 2)


def test_covariant_povm_outcomes():
  for m in (0, 1, 2):
    n = 2 ** (m + 1)
    effects = covariant_equatorial_povm(n)
    _assert_valid(effects)
    assert len(effects) == n
    assert equatorial_tick_count(effects) == n
    angles = np.array([e.angle() for e in effects])
    expected = 2 * np.pi * np.arange(n) / n
    assert np.allclose(np.exp(1j * angles), np.exp(1j * expected))
  with pytest.raises(PovmError):
    covariant_equatorial_povm(1)


def test_naimark_dilation_realises_the_povm():
  for m in (0, 1, 2):
    effects = covariant_equatorial_povm(2 ** (m + 1))
    u = naimark_dilation(effects, m)
    assert u.shape == (2 ** (m + 1), 2 ** (m + 1))
    assert np.allclose(u.conj().T @ u, np.eye(len(u)), atol=1e-10)
    realised = povm_from_circuit(u, m)
    for want, got in zip(effects, realised):
      assert np.allclose(want.matrix, got.matrix, atol=1e-10)


def test_naimark_dilation_pads_with_zero_effects():
  effects = covariant_equatorial_povm(3)
  realised = povm_from_circuit(naimark_dilation(effects, 1), 1)
  assert len(realised) == 4
  assert realised[3].is_zero
  assert equatorial_tick_count(realised) == 3


def test_naimark_dilation_limits():
  with pytest.raises(PovmError):
    naimark_dilation(covariant_equatorial_povm(8), 1)
  mixed = [PovmEffect(np.eye(2) / 2, "a"), PovmEffect(np.eye(2) / 2, "b")]
  with pytest.raises(PovmError):
    naimark_dilation(mixed, 1)
