import json

import numpy as np
import pytest

from anyonchronos.errors import AnyonChronosError
from anyonchronos.io.manifest import report_digest
from anyonchronos.io.report import canonical_json, clean_float, render_csv, render_json, to_plain
from anyonchronos.io.schema import TickRecord, ValidationReport


def test_clean_float():
  assert clean_float(1e-17) == 0.0
  assert clean_float(-0.5) == -0.5
  with pytest.raises(AnyonChronosError):
    clean_float(float("nan"))
  with pytest.raises(AnyonChronosError):
    clean_float(float("inf"))


def test_to_plain_handles_numpy_and_complex():
  plain = to_plain({"m": np.array([[1 + 2j, 0]]), "n": np.int64(3), "ok": np.bool_(True)})
  assert plain == {"m": [[[1.0, 2.0], [0.0, 0.0]]], "n": 3, "ok": True}


def test_floats_use_fixed_notation():
  text = canonical_json({"x": 0.1, "y": 1e-20, "z": 3})
  assert '"x": 1.00000000000e-01' in text
  assert '"y": 0.00000000000e+00' in text
  assert '"z": 3' in text
  assert json.loads(text)["x"] == 0.1


def test_render_json_has_schema_and_digest():
  text = render_json("demo", {"b": 1.5, "a": [1j]})
  doc = json.loads(text)
  assert doc["schema"] == 1
  assert doc["command"] == "demo"
  assert doc["a"] == [[0.0, 1.0]]
  assert len(doc["digest"]) == 16
  body = {k: v for k, v in doc.items() if k != "digest"}
  assert doc["digest"] == report_digest(canonical_json(body))
  assert text == render_json("demo", {"a": [1j], "b": 1.5})


def test_render_csv():
  rows = [{"index": 0, "p": 0.25}, {"index": 1, "p": None}]
  text = render_csv(rows, ["index", "p"])
  assert text.splitlines() == ["index,p", "0,2.50000000000e-01", "1,"]


def test_pydantic_rows_serialize():
  tick = TickRecord(index=0, angle=None, probability=0.5, conditional_state=[[1.0, 0.0]],
                    fidelity_vs_schrodinger=None)
  assert to_plain(tick)["angle"] is None
  report = ValidationReport(subject="demo")
  report.add("ok", True)
  report.add("bad", False, "detail")
  assert not report.passed
  assert report.failed() == ["bad"]
  assert to_plain(report)["checks"][1]["detail"] == "detail"
