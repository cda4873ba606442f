"""Deterministic report writers.

JSON reports carry ``"schema": 1`` and a digest of their canonical payload. Floats
are printed in fixed scientific notation with 12 significant digits and anything
below ``ZERO_CUTOFF`` in magnitude is written as zero, so identical runs give
byte-identical files.
"""
import json
import math
import re
from typing import Any, Iterable, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel

from ..errors import AnyonChronosError
from .manifest import report_digest

SCHEMA_VERSION = 1
ZERO_CUTOFF = 1e-15
FLOAT_FORMAT = "%.11e"

_MARK = "\u0000"
_MARKED = re.compile(r'"\\u0000([^"\\]*)\\u0000"')


def clean_float(x: float) -> float:
  x = float(x)
  if not math.isfinite(x):
    raise AnyonChronosError(f"cannot serialize non-finite value {x}")
  return 0.0 if abs(x) < ZERO_CUTOFF else x


def to_plain(obj: Any) -> Any:
  """Reduce numpy, pydantic and complex values to JSON-ready builtins."""
  if isinstance(obj, BaseModel):
    return to_plain(obj.model_dump())
  if isinstance(obj, np.ndarray):
    return to_plain(obj.tolist())
  if isinstance(obj, (bool, np.bool_)):
    return bool(obj)
  if isinstance(obj, (int, np.integer)):
    return int(obj)
  if isinstance(obj, (complex, np.complexfloating)):
    return [clean_float(obj.real), clean_float(obj.imag)]
  if isinstance(obj, (float, np.floating)):
    return clean_float(obj)
  if isinstance(obj, dict):
    return {str(k): to_plain(v) for k, v in obj.items()}
  if isinstance(obj, (list, tuple)):
    return [to_plain(v) for v in obj]
  return obj


def _mark_floats(obj: Any) -> Any:
  if isinstance(obj, float):
    return f"{_MARK}{FLOAT_FORMAT % obj}{_MARK}"
  if isinstance(obj, dict):
    return {k: _mark_floats(v) for k, v in obj.items()}
  if isinstance(obj, list):
    return [_mark_floats(v) for v in obj]
  return obj


def canonical_json(obj: Any) -> str:
  text = json.dumps(_mark_floats(to_plain(obj)), sort_keys=True, indent=2)
  return _MARKED.sub(r"\1", text)


def render_json(command: str, payload: dict) -> str:
  body = {"schema": SCHEMA_VERSION, "command": command, **to_plain(payload)}
  body["digest"] = report_digest(canonical_json(body))
  return canonical_json(body) + "\n"


def render_csv(rows: Iterable[dict], columns: Optional[List[str]] = None) -> str:
  """One row per record; complex cells must be flattened by the caller."""
  frame = pd.DataFrame([to_plain(r) for r in rows], columns=columns)
  return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
