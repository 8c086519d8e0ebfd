import click

from moodal.axioms.schemas import (
    ALL_SCHEMAS,
    DERIVED_SCHEMAS,
    AxiomFamily,
    AxiomSchema,
    HAPPY,
    select_schemas,
)
from moodal.axioms.sweep import (
    derived_fact_sweep,
    goodness_coherence_counterexample,
    rule_preservation_check,
    soundness_sweep,
)
from moodal.cli.helpers import catch_exceptions, status_for, write
from moodal.context import MoodalContext
from moodal.model.models import GOODNESS
from moodal.syntax.loader import resolve_model

COHERENCE_SAME_HAPPY = AxiomSchema(AxiomFamily.COHERENCE_SAME, HAPPY)


@click.command(name="axioms", short_help="Check axiom instances on a model.")
@click.argument("model")
@click.option(
    "--depth",
    type=click.IntRange(min=0),
    default=1,
    show_default=True,
    help="Depth of the formulas filling the schema slots.",
)
@click.option(
    "--schema",
    "schemas",
    multiple=True,
    help="Restrict to a schema, family or family prefix, e.g. 'coherence'.",
)
@click.option("--derived", is_flag=True, help="Check the derived facts instead.")
@click.option(
    "--rules", is_flag=True, help="Spot-check modus ponens and necessitation instead."
)
@click.option(
    "--pair-cap",
    type=click.IntRange(min=1),
    help="Instances per two-slot schema (default 20000).",
)
@click.pass_context
@catch_exceptions
def axioms_command(ctx, model, depth, schemas, derived, rules, pair_cap):
    """
    Instantiates the axiom schemas with every formula up to --depth over the
    signature of MODEL and reports the instances that are not valid in it.
    Exits 0 when every instance is valid and 1 otherwise. Sweeping happiness
    coherence on a goodness model also prints the known counterexample.
    \f

    :param model: Fixture name or path of the model document.
    :type model: str
    """
    context = MoodalContext.from_click(ctx.obj)
    if pair_cap:
        context.pair_cap = pair_cap
    loaded = resolve_model(model)
    selected = ()

    if rules:
        report = rule_preservation_check(loaded, depth, context)
    elif derived and not schemas:
        report = derived_fact_sweep(loaded, depth, context)
    else:
        pool = DERIVED_SCHEMAS if derived else ALL_SCHEMAS
        selected = select_schemas(schemas, pool) if schemas else pool
        report = soundness_sweep(loaded, depth, context, selected)

    output = report
    if loaded.kind == GOODNESS and COHERENCE_SAME_HAPPY in selected:
        output = [report, goodness_coherence_counterexample()]
    write(output, context.output_format, context.no_colour)
    ctx.exit(status_for(report.ok))
