from behave import *

from moodal.axioms import (
    goodness_coherence_counterexample,
    select_schemas,
    soundness_sweep,
)
from moodal.exceptions import MoodalException
from moodal.fixtures import load_fixture
from moodal.semantics import evaluator_for, valid_in_model


@when("the user sweeps the axioms up to depth {depth:d}")
def step_impl(context, depth):
    try:
        context.response = soundness_sweep(
            context.model, depth, context.moodal_context
        )
    except MoodalException as e:
        context.error = e


@when('the user sweeps the "{selection}" axioms up to depth {depth:d}')
def step_impl(context, selection, depth):
    try:
        context.response = soundness_sweep(
            context.model,
            depth,
            context.moodal_context,
            select_schemas(selection.split(",")),
        )
    except MoodalException as e:
        context.error = e


@then("every axiom instance holds")
def step_impl(context):
    assert context.error is None, context.error
    assert context.response.ok, str(context.response)


@then('some instance of "{schema}" fails')
def step_impl(context, schema):
    assert context.error is None, context.error
    assert any(
        failure.schema == schema for failure in context.response.failures
    ), str(context.response)


@when("the user asks for the goodness coherence counterexample")
def step_impl(context):
    try:
        context.response = goodness_coherence_counterexample()
    except MoodalException as e:
        context.error = e


@then('the counterexample instance fails at "{world}" in "{name}"')
def step_impl(context, world, name):
    assert context.error is None, context.error
    counterexample = context.response
    assert counterexample.model.name == name
    assert counterexample.world == world
    assert not evaluator_for(counterexample.model).holds(world, counterexample.formula)


@then('the same instance is valid in the model "{name}"')
def step_impl(context, name):
    assert valid_in_model(load_fixture(name), context.response.formula)
