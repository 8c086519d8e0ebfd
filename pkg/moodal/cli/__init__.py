# -*- coding: utf-8 -*-

"""
moodal.cli

This module implements Moodal's CLI, and should not be directly imported.
"""

import click
import colorama

from moodal import __version__
from moodal.cli.axioms import axioms_command
from moodal.cli.check import check_command, extension_command, validate_command
from moodal.cli.dual import dual_command
from moodal.cli.fixtures import fixtures_command, list_fixtures
from moodal.cli.helpers import catch_exceptions, setup_logging
from moodal.cli.search import search_group


@click.group()
@click.version_option(version=__version__, prog_name="Moodal")
@click.option("--debug", is_flag=True, help="Turn on debug logging.")
@click.option(
    "--output",
    type=click.Choice(["text", "yaml", "json"]),
    default="text",
    help="The formatting style for command output.",
)
@click.option("--json", "as_json", is_flag=True, help="Shorthand for --output json.")
@click.option("--no-colour", is_flag=True, help="Turn off output colouring.")
@click.option(
    "--trace", is_flag=True, help="Explain which condition decided each verdict."
)
@click.option(
    "--cap",
    type=click.IntRange(min=1),
    help="Upper bound on enumerated formulas, models or instances "
    "(default: $MOODAL_CAP or 1000000).",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=1,
    help="Threads used by sweeps and searches.",
)
@click.option(
    "--list-fixtures",
    is_flag=True,
    is_eager=True,
    expose_value=False,
    callback=list_fixtures,
    help="List the built-in fixtures and exit.",
)
@click.pass_context
@catch_exceptions
def cli(ctx, debug, output, as_json, no_colour, trace, cap, workers):
    """
    Moodal checks formulas about knowledge, happiness and sadness against
    finite epistemic models.
    """
    colorama.init()
    setup_logging(debug, no_colour)
    ctx.obj = {
        "output_format": "json" if as_json else output,
        "no_colour": no_colour,
        "trace": trace,
        "cap": cap,
        "workers": workers,
    }


cli.add_command(check_command)
cli.add_command(extension_command)
cli.add_command(validate_command)
cli.add_command(axioms_command)
cli.add_command(dual_command)
cli.add_command(search_group)
cli.add_command(fixtures_command)
