import click

from moodal.cli.helpers import catch_exceptions, write
from moodal.context import MoodalContext
from moodal.exceptions import SemanticsMismatchError
from moodal.formula import tau
from moodal.model.graph import to_dot
from moodal.model.models import EpistemicModel
from moodal.model.transforms import converse
from moodal.syntax.loader import dump_model, model_to_dict, resolve_model
from moodal.syntax.parser import parse_formula


@click.command(name="dual", short_help="Swap happiness and sadness.")
@click.option("--formula", help="Print the dual translation of this formula.")
@click.option("--model", help="Print the converse of this preference model.")
@click.option("--dot", is_flag=True, help="Render the model as Graphviz text.")
@click.pass_context
@catch_exceptions
def dual_command(ctx, formula, model, dot):
    """
    Prints the dual of a formula, with every H replaced by S and vice versa,
    or the converse of a preference model, with every preference reversed.
    A formula holds in a model exactly when its dual holds in the converse.
    \f

    :param formula: Formula text.
    :type formula: str
    :param model: Fixture name or path of the model document.
    :type model: str
    """
    if (formula is None) == (model is None):
        raise click.UsageError("Give exactly one of --formula and --model.")
    context = MoodalContext.from_click(ctx.obj)

    if formula is not None:
        dual = tau(parse_formula(formula))
        if context.output_format == "text":
            write(str(dual), no_colour=True)
        else:
            write({"formula": str(dual)}, context.output_format)
        return

    loaded = resolve_model(model)
    if not isinstance(loaded, EpistemicModel):
        raise SemanticsMismatchError(
            "Only preference models have a converse; '{0}' is a {1} model".format(
                loaded.name, loaded.kind
            )
        )
    result = converse(loaded)
    if dot:
        write(to_dot(result), no_colour=True)
    elif context.output_format == "text":
        write(dump_model(result).rstrip("\n"), no_colour=True)
    else:
        write(model_to_dict(result), context.output_format)
