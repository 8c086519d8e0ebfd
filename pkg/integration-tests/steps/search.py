from behave import *

from moodal.exceptions import MoodalException
from moodal.formula import Fragment
from moodal.search import (
    SearchBounds,
    check_pair_equivalence,
    dual_witness,
    find_model,
    find_separating_pair,
)
from moodal.syntax.loader import resolve_model
from moodal.syntax.parser import parse_formula


@when('the user compares "{left}" and "{right}" on the "{fragment}" fragment up to depth {depth:d}')
def step_impl(context, left, right, fragment, depth):
    try:
        context.response = check_pair_equivalence(
            resolve_model(left),
            resolve_model(right),
            Fragment(fragment),
            depth,
            context.moodal_context,
        )
    except MoodalException as e:
        context.error = e


@when('the user searches for a model where "{formula}" holds with at most {worlds:d} worlds')
def step_impl(context, formula, worlds):
    parsed = parse_formula(formula)
    try:
        context.response = find_model(
            parsed,
            bounds=SearchBounds.for_formula(parsed, max_worlds=worlds),
            context=context.moodal_context,
        )
    except MoodalException as e:
        context.error = e


@when('the user separates "{target}" from the "{fragment}" fragment with at most {worlds:d} worlds up to depth {depth:d}')
def step_impl(context, target, fragment, worlds, depth):
    parsed = parse_formula(target)
    try:
        context.response = find_separating_pair(
            Fragment(fragment),
            parsed,
            SearchBounds.for_formula(parsed, max_worlds=worlds, max_formula_depth=depth),
            context.moodal_context,
        )
    except MoodalException as e:
        context.error = e


@when("the user transfers the pair across the duality")
def step_impl(context):
    context.response = dual_witness(context.response)


@then('the search reports "{outcome}"')
def step_impl(context, outcome):
    assert context.error is None, context.error
    assert context.response.outcome == outcome, str(context.response)


@then('the separating formula is "{formula}"')
def step_impl(context, formula):
    assert str(context.response.formula) == formula, str(context.response)
