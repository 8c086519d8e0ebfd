from behave import *

from moodal import exceptions


@then("no exception is raised")
def step_impl(context):
    assert context.error is None


@then('a "{exception_type}" is raised')
def step_impl(context, exception_type):
    assert isinstance(context.error, getattr(exceptions, exception_type))


@then('the error mentions "{message}"')
def step_impl(context, message):
    assert message in str(context.error), str(context.error)


@then("the command exits with {code:d}")
def step_impl(context, code):
    assert context.exit_code == code, context.output


@then('the output contains "{text}"')
def step_impl(context, text):
    assert text in context.output, context.output


@then('the output starts with "{text}"')
def step_impl(context, text):
    assert context.output.startswith(text), context.output
