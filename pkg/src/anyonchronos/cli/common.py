"""Options, configuration and report output shared by every subcommand."""

from dataclasses import dataclass, field
from typing import Callable, List, Optional
import functools
import logging
import sys

import click
from pydantic import ValidationError

from ..errors import AnyonChronosError
from ..io.manifest import config_digest, write_text
from ..io.report import render_csv, render_json
from ..model.anyons import MODEL_NAMES
from ..settings import ExperimentConfig, Tolerances, load_config, use_tolerances

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

TOLERANCE_NAMES = tuple(Tolerances.model_fields)


def configure_logging(verbose: bool) -> None:
    """Logs go to stderr so reports on stdout stay machine-readable."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


@dataclass
class CommandReport:
    """What a subcommand produced: a JSON payload and, for tabular commands, CSV rows."""

    command: str
    payload: dict
    rows: Optional[List[dict]] = field(default=None, repr=False)
    columns: Optional[List[str]] = None


def build_config(config_path: Optional[str], **overrides) -> ExperimentConfig:
    """Packaged defaults, then the YAML file, then command-line flags.

    Raises:
        click.BadParameter: If the configuration file does not validate
    """
    try:
        return load_config(config_path).with_overrides(**overrides)
    except ValidationError as e:
        raise click.BadParameter(str(e), param_hint="--config") from None


def emit(report: CommandReport, config: ExperimentConfig) -> None:
    if config.format == "csv":
        text = render_csv(report.rows or [], report.columns)
    else:
        settings = config.model_dump(exclude={"output", "format"})
        payload = {**report.payload, "config_digest": config_digest(settings)}
        text = render_json(report.command, payload)
    if config.output:
        write_text(config.output, text)
        logger.info(f"Wrote {report.command} report to {config.output}")
    else:
        click.echo(text, nl=False)


_OPTIONS = [
    click.option(
        "--model",
        type=click.Choice(MODEL_NAMES),
        default=None,
        help="Anyon model (default: su2_2)",
    ),
    click.option(
        "--config",
        "config_path",
        type=click.Path(exists=True, dir_okay=False),
        help="YAML configuration file with the same keys as the packaged defaults",
    ),
    click.option(
        "--output",
        "-o",
        type=click.Path(dir_okay=False),
        help="Write the report to this file instead of stdout",
    ),
    click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv"]),
        default=None,
        help="Report format (default: json)",
    ),
] + [
    click.option(
        f"--tol-{name.replace('_', '-')}",
        f"tol_{name}",
        type=float,
        default=None,
        help=f"Override the {name.replace('_', ' ')} tolerance",
    )
    for name in TOLERANCE_NAMES
]


def experiment_command(tabular: bool = False) -> Callable:
    """Attach the shared options and turn the returned report into output.

    The wrapped function receives the resolved ``ExperimentConfig`` first and returns
    a ``CommandReport``. Domain errors exit with status 1, usage errors with 2.
    """

    def decorator(f: Callable) -> Callable:
        @functools.wraps(f)
        def wrapper(model, config_path, output, fmt, **kwargs):
            tolerances = {name: kwargs.pop(f"tol_{name}") for name in TOLERANCE_NAMES}
            config = build_config(
                config_path, model=model, output=output, format=fmt, **tolerances
            )
            if config.format == "csv" and not tabular:
                raise click.UsageError(f"{f.__name__} has no tabular output; use --format json")
            with use_tolerances(config.tolerances):
                try:
                    report = f(config, **kwargs)
                    emit(report, config)
                except AnyonChronosError as e:
                    logger.debug(f"{type(e).__name__}: {e}")
                    raise click.ClickException(f"{type(e).__name__}: {e}") from e

        for option in reversed(_OPTIONS):
            wrapper = option(wrapper)
        return wrapper

    return decorator


def complex_columns(prefix: str, values) -> dict:
    """Flatten complex entries into ``<prefix><k>_re`` / ``_im`` cells."""
    row = {}
    for k, z in enumerate(values):
        row[f"{prefix}{k}_re"] = float(z.real)
        row[f"{prefix}{k}_im"] = float(z.imag)
    return row
