import os

from behave import *

from moodal.context import MoodalContext
from moodal.exceptions import MoodalException
from moodal.syntax.loader import check_model, resolve_model


def model_reference(context, name):
    file_path = os.path.join(context.models_dir, name + ".yaml")
    return file_path if os.path.isfile(file_path) else name


@given('the model "{name}"')
def step_impl(context, name):
    context.model = resolve_model(model_reference(context, name))


@given("a cap of {cap:d}")
def step_impl(context, cap):
    context.moodal_context = MoodalContext(cap=cap)


@when('the user loads the model "{name}"')
def step_impl(context, name):
    try:
        context.model = resolve_model(model_reference(context, name))
    except MoodalException as e:
        context.error = e


@when('the user validates the model "{name}"')
def step_impl(context, name):
    try:
        context.response = check_model(model_reference(context, name))
    except MoodalException as e:
        context.error = e


@then("the model is valid")
def step_impl(context):
    assert context.response.ok, str(context.response)


@then('the model breaks the "{rule}" rule')
def step_impl(context, rule):
    assert not context.response.ok
    assert rule in context.response.rules, str(context.response)
