import click

from moodal.cli.helpers import catch_exceptions, status_for, write
from moodal.context import MoodalContext
from moodal.helpers import ordered_subset
from moodal.semantics.evaluator import SEMANTICS, evaluator_for
from moodal.syntax.loader import check_model, resolve_model
from moodal.syntax.parser import parse_formula

semantics_option = click.option(
    "--semantics",
    type=click.Choice(list(SEMANTICS)),
    help="Satisfaction relation to use; defaults to the one of the model kind.",
)


@click.command(name="check", short_help="Evaluate a formula at a world.")
@click.argument("model")
@click.argument("world")
@click.argument("formula")
@semantics_option
@click.option("--trace", is_flag=True, help="Explain the verdict.")
@click.pass_context
@catch_exceptions
def check_command(ctx, model, world, formula, semantics, trace):
    """
    Evaluates FORMULA at WORLD of MODEL, a fixture name or a model file.
    Exits 0 when the formula holds and 1 when it fails.
    \f

    :param model: Fixture name or path of the model document.
    :type model: str
    :param world: The world to evaluate at.
    :type world: str
    :param formula: The formula text.
    :type formula: str
    """
    context = MoodalContext.from_click(ctx.obj)
    evaluator = evaluator_for(resolve_model(model), semantics)
    verdict = evaluator.evaluate(
        world, parse_formula(formula), trace=trace or context.trace
    )
    write(verdict, context.output_format, context.no_colour)
    ctx.exit(status_for(verdict.holds))


@click.command(name="extension", short_help="List the worlds where a formula holds.")
@click.argument("model")
@click.argument("formula")
@semantics_option
@click.pass_context
@catch_exceptions
def extension_command(ctx, model, formula, semantics):
    """
    Prints the worlds of MODEL where FORMULA holds, in declared order.
    \f

    :param model: Fixture name or path of the model document.
    :type model: str
    :param formula: The formula text.
    :type formula: str
    """
    context = MoodalContext.from_click(ctx.obj)
    loaded = resolve_model(model)
    parsed = parse_formula(formula)
    worlds = ordered_subset(
        loaded.worlds, evaluator_for(loaded, semantics).extension(parsed)
    )
    if context.output_format == "text":
        write(" ".join(worlds), no_colour=True)
    else:
        write({"formula": str(parsed), "worlds": list(worlds)}, context.output_format)


@click.command(name="validate", short_help="Check a model against its invariants.")
@click.argument("model")
@click.pass_context
@catch_exceptions
def validate_command(ctx, model):
    """
    Validates MODEL and lists every violated invariant. Exits 0 when the
    model is well formed and 1 otherwise.
    \f

    :param model: Fixture name or path of the model document.
    :type model: str
    """
    context = MoodalContext.from_click(ctx.obj)
    report = check_model(model)
    write(report, context.output_format, context.no_colour)
    ctx.exit(status_for(report.ok))
