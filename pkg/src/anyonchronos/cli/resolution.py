from typing import Optional

import click

from ..clock.resolution import GATE_CLASSES
from ..simulator import AnyonSimulator
from .common import CommandReport, experiment_command


@click.command("resolution")
@click.option("--gates", type=click.Choice(GATE_CLASSES), default="clifford",
              help="Gate class available to the clock circuit (default: clifford)")
@click.option("--ancilla", "-m", type=int, default=None, help="Number of ancilla qubits")
@experiment_command()
def resolution(config, gates: str, ancilla: Optional[int]):
  """Smallest tick spacing a clock built from the gate class can resolve."""
  m = ancilla if ancilla is not None else config.ancilla
  if m is None:
    raise click.UsageError("--ancilla is required")
  sim = AnyonSimulator(config.model, config)
  report = sim.resolution(gates, m)
  payload = report.to_document()
  if gates == "clifford":
    payload["note"] = "N is the enumerated number of equatorial effect directions"
  return CommandReport("resolution", payload)
