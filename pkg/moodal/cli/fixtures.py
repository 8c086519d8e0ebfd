import click

from moodal.cli.helpers import catch_exceptions, write
from moodal.context import MoodalContext
from moodal.fixtures import FIXTURES, load_fixture
from moodal.syntax.loader import dump_model, model_to_dict


def _listing():
    width = max(len(name) for name in FIXTURES)
    return "\n".join(
        "{0:<{w}}  {1:<10}  {2}".format(
            fixture.name, fixture.kind, fixture.provenance, w=width
        )
        for fixture in FIXTURES.values()
    )


def list_fixtures(ctx, param, value):
    """
    Eager callback of the root ``--list-fixtures`` flag.
    """
    if not value or ctx.resilient_parsing:
        return
    click.echo(_listing())
    ctx.exit()


@click.command(name="fixtures", short_help="List or show built-in fixtures.")
@click.argument("name", required=False)
@click.pass_context
@catch_exceptions
def fixtures_command(ctx, name):
    """
    Lists the built-in fixtures with the scenario each encodes, or prints
    the model document of fixture NAME.
    \f

    :param name: Optional fixture name.
    :type name: str
    """
    context = MoodalContext.from_click(ctx.obj)
    if name is None:
        if context.output_format == "text":
            write(_listing(), no_colour=True)
        else:
            write(
                [dict(fixture._asdict()) for fixture in FIXTURES.values()],
                context.output_format,
            )
        return

    model = load_fixture(name)
    if context.output_format == "text":
        write(dump_model(model).rstrip("\n"), no_colour=True)
    else:
        write(model_to_dict(model), context.output_format)
