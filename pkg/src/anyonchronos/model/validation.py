"""Consistency checks on anyon model data.

Every check lands in the report; a failing check never raises.
"""
import logging

import numpy as np

from ..core.linalg import is_unitary
from ..errors import AnyonChronosError
from ..io.schema import ValidationReport
from ..settings import TOL
from .anyons import AnyonModelSpec

logger = logging.getLogger(__name__)


def _identity_axiom(spec: AnyonModelSpec) -> bool:
  vac = spec.vacuum
  return all(
    spec.rules.allowed(vac, a, c) == (c == a)
    for a in spec.labels for c in spec.labels
  )


def _commutative(spec: AnyonModelSpec) -> bool:
  return all((b, a, c) in spec.rules.triples for (a, b, c) in spec.rules.triples)


def validate_model(spec: AnyonModelSpec) -> ValidationReport:
  report = ValidationReport(subject=f"model {spec.name}")
  f, r = spec.f_matrix, spec.r_matrix

  report.add("labels_dense", [lab.id for lab in spec.labels] == list(range(len(spec.labels))))
  f_defect = float(np.max(np.abs(f.conj().T @ f - np.eye(len(f)))))
  report.add("f_unitary", is_unitary(f), f"max |F^dag F - I| = {f_defect:.3e}")
  off_diagonal = float(np.max(np.abs(r - np.diag(np.diag(r)))))
  report.add("r_diagonal", off_diagonal < TOL.unitary, f"max off-diagonal {off_diagonal:.3e}")
  report.add("r_unitary", is_unitary(r))
  report.add("fusion_identity", _identity_axiom(spec))
  report.add("fusion_commutative", _commutative(spec))

  sigma_channels = None
  try:
    sigma = spec.label("sigma")
    sigma_channels = [c.name for c in spec.fuse(sigma, sigma)]
  except AnyonChronosError as e:
    report.add("sigma_channels", False, str(e))
  if sigma_channels is not None:
    expected = [c.name for c in spec.channels]
    report.add("sigma_channels", sigma_channels == expected, f"sigma x sigma -> {sigma_channels}")

  # imported late: braiding depends on this package
  from ..braiding.generators import verify_braid_relations
  from ..fusion.basis import qubit_basis, two_triple_basis

  for name, make_basis in (("three_sigma", qubit_basis), ("six_sigma", two_triple_basis)):
    try:
      sub = verify_braid_relations(spec, make_basis(spec))
    except AnyonChronosError as e:
      report.add(f"braid_relations_{name}", False, str(e))
      continue
    for check in sub.checks:
      report.add(f"{name}:{check.name}", check.passed, check.detail)

  if report.passed:
    logger.info(f"Model {spec.name}: {len(report.checks)} checks passed")
  else:
    logger.warning(f"Model {spec.name} failed checks: {', '.join(report.failed())}")
  return report
