from typing import Optional

import click
import numpy as np

from ..simulator import RESOURCES, AnyonSimulator
from .common import CommandReport, experiment_command

CSV_COLUMNS = [
  "index", "angle", "probability", "fidelity_vs_schrodinger",
  "state0_re", "state0_im", "state1_re", "state1_im",
]


@click.group("paw")
def paw_group():
  """Relational time from a stationary clock-system state."""


@paw_group.command("run")
@click.option("--resource", type=click.Choice(RESOURCES), default="singlet",
              help="Global state to condition (default: singlet)")
@click.option("--ticks", "-n", type=int, default=None, help="Equatorial clock ticks N")
@click.option("--povm-file", type=click.Path(exists=True, dir_okay=False),
              help="Clock effects (YAML or JSON) to use as ticks instead of N")
@click.option("--pin-system", is_flag=True,
              help="Require H_s = -pi Z / N instead of deriving it from the state")
@experiment_command(tabular=True)
def run(config, resource: str, ticks: Optional[int], povm_file: Optional[str],
        pin_system: bool):
  """Condition the global state on each clock tick.

  Reports per-tick probabilities and conditional system states, their fidelity with
  Schrodinger evolution under the derived H_s, and the tick spacing.

  \b
  Examples:
      anyonchronos paw run --resource singlet --ticks 4
      anyonchronos paw run --resource braided --ticks 8 --format csv
  """
  if ticks is None and povm_file is None and config.ticks is None:
    raise click.UsageError("give --ticks or --povm-file")
  sim = AnyonSimulator(config.model, config)
  report = sim.run(resource, ticks, povm_file, pin_system=pin_system)
  payload = report.to_document()
  payload["delta_tau"] = 2 * np.pi / report.n_ticks
  payload["model"] = sim.model.name
  rows = []
  for t in report.ticks:
    row = {
      "index": t.index,
      "angle": t.angle,
      "probability": t.probability,
      "fidelity_vs_schrodinger": t.fidelity_vs_schrodinger,
    }
    for k, pair in enumerate(t.conditional_state or []):
      row[f"state{k}_re"], row[f"state{k}_im"] = pair
    rows.append(row)
  return CommandReport("paw run", payload, rows, CSV_COLUMNS)
