"""Entry point for the ``anyonchronos`` command."""

from typing import List, Optional
import sys

import click

from .. import __version__
from .braid import braid_group
from .common import configure_logging
from .fuse import fuse
from .models import model_group
from .paw import paw_group
from .povm import povm_group
from .resolution import resolution


@click.group()
@click.version_option(__version__, prog_name="anyonchronos")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
def cli(verbose):
    """Relational time in an anyonic universe.

    Every subcommand writes one JSON report (or CSV for tabular ones) to stdout
    or to --output. Exit status is 0 on success, 1 on a domain error and 2 on a
    usage error.
    """
    configure_logging(verbose)


cli.add_command(model_group)
cli.add_command(braid_group)
cli.add_command(fuse)
cli.add_command(povm_group)
cli.add_command(paw_group)
cli.add_command(resolution)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit status instead of exiting."""
    try:
        cli.main(args=argv, prog_name="anyonchronos", standalone_mode=True)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
