from typing import Optional

import click

from ..measurement.catalog import METHODS
from ..simulator import AnyonSimulator
from .common import CommandReport, experiment_command

CSV_COLUMNS = ["outcome", "bloch_x", "bloch_y", "bloch_z", "angle", "equatorial"]


@click.group("povm")
def povm_group():
  """Clock POVMs reachable with braid-generated circuits."""


@povm_group.command("enumerate")
@click.option("--ancilla", "-m", type=int, default=None, help="Number of ancilla qubits (0-2)")
@click.option(
  "--method",
  type=click.Choice(METHODS),
  default=None,
  help="closure (m <= 1) or stabilizer; default picks by m",
)
@click.option(
  "--prepared-ancillas/--zero-ancillas",
  default=True,
  help="Also enumerate with ancillas in any product stabilizer state",
)
@experiment_command(tabular=True)
def enumerate_povms(config, ancilla: Optional[int], method: Optional[str],
                    prepared_ancillas: bool):
  """Catalog every distinct clock effect and count the equatorial ticks.

  \b
  Example:
      anyonchronos povm enumerate --ancilla 1
  """
  m = ancilla if ancilla is not None else config.ancilla
  if m is None:
    raise click.UsageError("--ancilla is required")
  sim = AnyonSimulator(config.model, config)
  catalog = sim.catalog(m, method)
  payload = catalog.to_document()
  if prepared_ancillas:
    prepared = sim.catalog(m, method, "stabilizer")
    payload["prepared"] = {
      "n_distinct": prepared.n_distinct,
      "n_max": prepared.n_max,
      "delta_tau": prepared.delta_tau,
      "equatorial_ticks": [e.angle for e in prepared.equatorial],
      "same_effects": prepared.keys() == catalog.keys(),
    }
  rows = [
    {
      "outcome": e.label,
      "bloch_x": e.bloch[0],
      "bloch_y": e.bloch[1],
      "bloch_z": e.bloch[2],
      "angle": e.angle,
      "equatorial": e.equatorial,
    }
    for e in catalog.effects
  ]
  return CommandReport("povm enumerate", payload, rows, CSV_COLUMNS)
