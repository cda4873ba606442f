import numpy as np
import pytest

from anyonchronos.clock import ancilla_resolution_floor, time_resolution
from anyonchronos.errors import DimensionMismatchError, ScaleGuardError


def test_ancilla_floor():
  assert np.isclose(ancilla_resolution_floor(2, 0), np.pi)
  assert np.isclose(ancilla_resolution_floor(2, 2), np.pi / 4)
  assert np.isclose(ancilla_resolution_floor(3, 1), 2 * np.pi / 9)
  with pytest.raises(DimensionMismatchError):
    ancilla_resolution_floor(1, 0)
  with pytest.raises(DimensionMismatchError):
    ancilla_resolution_floor(2, -1)


def test_universal_resolution_halves_per_ancilla():
  for m in (0, 1, 2):
    report = time_resolution("universal", m)
    assert report.n_ticks == 2 ** (m + 1)
    assert np.isclose(report.delta_tau, 2 * np.pi / 2 ** (m + 1))
    assert np.isclose(report.effective_delta_tau, report.delta_tau)


def test_clifford_resolution_is_discrete():
  reports = [time_resolution("clifford", m) for m in (0, 1, 2)]
  assert [r.n_ticks for r in reports] == [4, 4, 4]
  for r in reports:
    assert np.isclose(r.delta_tau, np.pi / 2)
  assert np.isclose(reports[0].effective_delta_tau, np.pi)
  assert np.isclose(reports[1].effective_delta_tau, np.pi / 2)
  assert np.isclose(reports[2].effective_delta_tau, np.pi / 2)
  assert reports[2].n_max_source == "enumerated (stabilizer)"


def test_resolution_errors():
  with pytest.raises(DimensionMismatchError):
    time_resolution("analog", 1)
  with pytest.raises(ScaleGuardError):
    time_resolution("clifford", 3)


def test_resolution_document():
  doc = time_resolution("universal", 1).to_document()
  assert doc["gates"] == "universal"
  assert doc["n_ticks"] == 4
  assert doc["n_max_source"] == "covariant dilation"
