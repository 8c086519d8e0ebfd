from behave import *

from moodal.exceptions import MoodalException
from moodal.semantics import evaluator_for
from moodal.syntax.parser import parse_formula


@when('the user checks "{formula}" at world "{world}"')
def step_impl(context, formula, world):
    try:
        context.response = evaluator_for(context.model).evaluate(
            world, parse_formula(formula), trace=True
        )
    except MoodalException as e:
        context.error = e


@when('the user checks "{formula}" at world "{world}" with "{semantics}" semantics')
def step_impl(context, formula, world, semantics):
    try:
        context.response = evaluator_for(context.model, semantics).evaluate(
            world, parse_formula(formula)
        )
    except MoodalException as e:
        context.error = e


@when('the user asks where "{formula}" holds')
def step_impl(context, formula):
    try:
        context.response = evaluator_for(context.model).extension(parse_formula(formula))
    except MoodalException as e:
        context.error = e


@then("the formula holds")
def step_impl(context):
    assert context.error is None, context.error
    assert context.response.holds, str(context.response)


@then("the formula fails")
def step_impl(context):
    assert context.error is None, context.error
    assert not context.response.holds, str(context.response)


@then('the formula holds exactly at "{worlds}"')
def step_impl(context, worlds):
    expected = frozenset(world.strip() for world in worlds.split(",") if world.strip())
    assert frozenset(context.response) == expected, sorted(context.response)


@then("the formula holds nowhere")
def step_impl(context):
    assert not context.response, sorted(context.response)


@then('the trace mentions "{text}"')
def step_impl(context, text):
    assert text in str(context.response), str(context.response)
