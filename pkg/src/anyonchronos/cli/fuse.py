from typing import Tuple

import click

from ..measurement.fusion import fuse_pair, locate_pair
from ..simulator import AnyonSimulator
from .common import CommandReport, experiment_command


@click.command("fuse")
@click.option(
  "--state",
  "labels",
  required=True,
  help="Qubit label (0 1 + - +i -i), or clock,system labels on six sigmas, e.g. '+,0'",
)
@click.option("--pair", nargs=2, type=int, required=True, help="Anyon positions, e.g. --pair 2 3")
@experiment_command()
def fuse(config, labels: str, pair: Tuple[int, int]):
  """Fuse a pair of sigmas and report the charge distribution.

  Pairs (1,2), (2,3), (1,3) of a triple measure Z, X, Y of its qubit.
  """
  sim = AnyonSimulator(config.model, config)
  state = sim.encode([lab.strip() for lab in labels.split(",")])
  triple, axis = locate_pair(state.basis, pair)
  outcomes = fuse_pair(state, pair)
  return CommandReport("fuse", {
    "state": state.to_document(),
    "pair": list(pair),
    "triple": triple,
    "axis": axis,
    "outcomes": [
      {
        "charge": o.charge.name,
        "probability": o.probability,
        "post_state": None if o.post_state is None else o.post_state.to_document(),
      }
      for o in outcomes
    ],
  })
