import click

from ..model.validation import validate_model
from ..simulator import AnyonSimulator
from .common import CommandReport, experiment_command


@click.group("model")
def model_group():
  """Inspect anyon model data."""


@model_group.command("show")
@experiment_command()
def show(config):
  """Print F, R and the fusion rules together with their validation checks."""
  sim = AnyonSimulator(config.model, config)
  report = validate_model(sim.model)
  return CommandReport("model show", {
    "model": sim.model.to_document(),
    "valid": report.passed,
    "validation": report,
  })
