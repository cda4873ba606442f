import hashlib
import json
import os


def report_digest(canonical_text: str) -> str:
  return hashlib.sha256(canonical_text.encode()).hexdigest()[:16]


def config_digest(meta: dict) -> str:
  s = json.dumps(meta, sort_keys=True).encode()
  return hashlib.sha256(s).hexdigest()[:16]


def write_text(path: str, text: str):
  parent = os.path.dirname(path)
  if parent:
    os.makedirs(parent, exist_ok=True)
  with open(path, "w", encoding="utf-8") as f:
    f.write(text)
