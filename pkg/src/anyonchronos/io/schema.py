from typing import List, Optional

from pydantic import BaseModel, Field

ComplexPair = List[float]


class CheckResult(BaseModel):
  name: str
  passed: bool
  detail: Optional[str] = None


class ValidationReport(BaseModel):
  subject: str
  checks: List[CheckResult] = Field(default_factory=list)

  @property
  def passed(self) -> bool:
    return all(c.passed for c in self.checks)

  def add(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
    self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))

  def failed(self) -> List[str]:
    return [c.name for c in self.checks if not c.passed]


class TickRecord(BaseModel):
  index: int
  angle: Optional[float]
  probability: float
  conditional_state: Optional[List[ComplexPair]]
  fidelity_vs_schrodinger: Optional[float]


class PovmFileEffect(BaseModel):
  outcome: str
  matrix: List[List[ComplexPair]]


class PovmFile(BaseModel):
  """Clock POVM read from YAML or JSON: effects as 2x2 matrices of [re, im] pairs."""
  effects: List[PovmFileEffect]
