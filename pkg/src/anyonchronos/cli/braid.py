from typing import Optional, Tuple

import click

from ..braiding.generators import BELL_PAIR_WORD
from ..braiding.group import identify_sqrt_paulis
from ..fusion.state import basis_state
from ..simulator import AnyonSimulator
from .common import CommandReport, complex_columns, experiment_command

CONVENTION = {
  "order": "time order, left to right",
  "over_crossing": "s<i>",
  "under_crossing": "S<i>",
  "bell_pair_word": BELL_PAIR_WORD,
}

ANYON_COUNTS = click.Choice(["3", "6"])


@click.group("braid")
def braid_group():
  """Braid words and the gate groups they generate."""


@braid_group.command("eval")
@click.option("--anyons", type=ANYON_COUNTS, default="3", help="Number of sigmas (default: 3)")
@click.option("--on", "bits", default=None, help="Also apply the braid to this basis state")
@click.argument("word", nargs=-1, required=True)
@experiment_command()
def evaluate(config, anyons: str, bits: Optional[str], word: Tuple[str, ...]):
  """Evaluate a braid word such as "s2 s4 s3" to its fusion-space unitary.

  \b
  Examples:
      anyonchronos braid eval --anyons 3 s2
      anyonchronos braid eval --anyons 6 --on 00 s2 s4 s3
  """
  n = int(anyons)
  sim = AnyonSimulator(config.model, config)
  text = " ".join(word)
  gate = sim.evaluate(text, n)
  payload = {
    "anyons": n,
    "word": text,
    "dim": gate.dim,
    "matrix": gate.entries,
    "convention": CONVENTION,
  }
  if bits is not None:
    start = basis_state(sim.basis(n), bits)
    payload["input"] = bits
    payload["state"] = gate @ start.amplitudes
  return CommandReport("braid eval", payload)


@braid_group.command("closure")
@click.option("--anyons", type=ANYON_COUNTS, default="3", help="Number of sigmas (default: 3)")
@click.option("--elements/--no-elements", default=False, help="List every group element")
@experiment_command(tabular=True)
def closure(config, anyons: str, elements: bool):
  """Close the braid generators into a finite group, modulo global phase."""
  n = int(anyons)
  sim = AnyonSimulator(config.model, config)
  group = sim.closure(n)
  payload = {"anyons": n, "group_order": len(group)}
  if n == 3:
    payload["sqrt_paulis"] = identify_sqrt_paulis(group, sim.model)
  if elements:
    payload["elements"] = [g.matrix for g in group]
  rows = [
    {"index": k, "dim": g.dim, **complex_columns("u", g.matrix.reshape(-1))}
    for k, g in enumerate(group)
  ]
  return CommandReport("braid closure", payload, rows)
