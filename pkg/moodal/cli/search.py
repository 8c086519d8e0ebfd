import logging

import click

from moodal.cli.helpers import catch_exceptions, status_for, write
from moodal.context import DEFAULT_SEARCH_DEPTH, MoodalContext
from moodal.formula import Fragment
from moodal.search.bounds import SearchBounds
from moodal.search.search import (
    MODES,
    SATISFY,
    check_pair_equivalence,
    dual_witness,
    find_model,
    find_separating_pair,
)
from moodal.syntax.loader import resolve_model
from moodal.syntax.parser import parse_formula

logger = logging.getLogger(__name__)

fragment_option = click.option(
    "--fragment",
    type=click.Choice([fragment.value for fragment in Fragment]),
    default=Fragment.FULL.value,
    show_default=True,
    help="Sublanguage the compared formulas are drawn from.",
)


def bounds_options(func):
    """
    Adds the options describing the enumerated models.
    """
    options = [
        click.option(
            "--max-worlds",
            type=int,
            default=3,
            show_default=True,
            help="Largest number of worlds.",
        ),
        click.option(
            "--min-worlds",
            type=int,
            default=1,
            show_default=True,
            help="Smallest number of worlds.",
        ),
        click.option(
            "--agent",
            "agents",
            multiple=True,
            help="Agent of the enumerated models; defaults to those of the formula.",
        ),
        click.option(
            "--var",
            "variables",
            multiple=True,
            help="Variable of the enumerated models; defaults to those of the formula.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _bounds(formula, context, max_worlds, min_worlds, agents, variables, depth=None):
    overrides = dict(max_worlds=max_worlds, min_worlds=min_worlds, cap=context.cap)
    if agents:
        overrides["agents"] = agents
    if variables:
        overrides["variables"] = variables
    if depth is not None:
        overrides["max_formula_depth"] = depth
    return SearchBounds.for_formula(formula, **overrides)


@click.group(name="search")
def search_group():
    """
    Commands for bounded searches over small models.
    """
    pass


@search_group.command(name="find")
@click.argument("formula")
@click.option(
    "--mode", type=click.Choice(MODES), default=SATISFY, show_default=True
)
@bounds_options
@click.pass_context
@catch_exceptions
def find_command(ctx, formula, mode, max_worlds, min_worlds, agents, variables):
    """
    Searches the enumerated models for a world where FORMULA holds (or, with
    --mode refute, fails). Exits 0 with the witness and 1 when every model
    within the bounds was examined without success.
    \f

    :param formula: The formula text.
    :type formula: str
    """
    context = MoodalContext.from_click(ctx.obj)
    parsed = parse_formula(formula)
    bounds = _bounds(parsed, context, max_worlds, min_worlds, agents, variables)
    report = find_model(parsed, mode, bounds, context)
    write(report, context.output_format, context.no_colour)
    ctx.exit(status_for(report.success))


@search_group.command(name="equiv")
@click.argument("left")
@click.argument("right")
@fragment_option
@click.option(
    "--depth",
    type=click.IntRange(min=0),
    default=DEFAULT_SEARCH_DEPTH,
    show_default=True,
    help="Depth of the compared formulas.",
)
@click.pass_context
@catch_exceptions
def equiv_command(ctx, left, right, fragment, depth):
    """
    Compares models LEFT and RIGHT on every formula of the fragment up to
    --depth at every world. Exits 0 when they agree and 1 with the first
    formula that tells them apart.
    \f

    :param left: Fixture name or path of the first model.
    :type left: str
    :param right: Fixture name or path of the second model.
    :type right: str
    """
    context = MoodalContext.from_click(ctx.obj)
    report = check_pair_equivalence(
        resolve_model(left), resolve_model(right), Fragment(fragment), depth, context
    )
    write(report, context.output_format, context.no_colour)
    ctx.exit(status_for(report.success))


@search_group.command(name="separate")
@fragment_option
@click.option("--target", required=True, help="Formula outside the fragment.")
@click.option(
    "--depth",
    type=click.IntRange(min=0),
    default=DEFAULT_SEARCH_DEPTH,
    show_default=True,
    help="Depth up to which the pair must agree on the fragment.",
)
@click.option(
    "--dual", is_flag=True, help="Also print the pair transferred by the duality."
)
@bounds_options
@click.pass_context
@catch_exceptions
def separate_command(
    ctx, fragment, target, depth, dual, max_worlds, min_worlds, agents, variables
):
    """
    Searches for two models, differing only in preferences, that agree on
    every formula of the fragment up to --depth but disagree on --target.
    Exits 0 with the pair and 1 when none exists within the bounds.
    \f

    :param target: The formula text.
    :type target: str
    """
    context = MoodalContext.from_click(ctx.obj)
    parsed = parse_formula(target)
    bounds = _bounds(parsed, context, max_worlds, min_worlds, agents, variables, depth)
    report = find_separating_pair(Fragment(fragment), parsed, bounds, context)
    reports = [report]
    if dual and report.success:
        reports.append(dual_witness(report, context))
    write(
        reports if len(reports) > 1 else report,
        context.output_format,
        context.no_colour,
    )
    ctx.exit(status_for(report.success))
