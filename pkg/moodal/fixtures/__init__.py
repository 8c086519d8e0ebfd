# -*- coding: utf-8 -*-

"""
moodal.fixtures

Built-in model documents, addressable by name from every command. Each
fixture carries a provenance note describing the scenario it encodes.
"""
from collections import OrderedDict, namedtuple
from functools import lru_cache
from os import path

from moodal.exceptions import UnknownModelError

Fixture = namedtuple("Fixture", ["name", "kind", "provenance"])

FIXTURES = OrderedDict(
    (fixture.name, fixture)
    for fixture in (
        Fixture(
            "gift",
            "preference",
            "Gift scenario: sender s, recipient p, lost gift or lost note",
        ),
        Fixture(
            "battle",
            "preference",
            "Battle of cuisines under perfect information, "
            "preferences read off the pay-off table",
        ),
        Fixture(
            "battle-util",
            "utility",
            "Battle of cuisines with the pay-off table as utilities",
        ),
        Fixture(
            "lottery",
            "preference",
            "Three-player lottery, each player sees only their own ticket",
        ),
        Fixture(
            "undef-left",
            "preference",
            "Left model of the pair no sadness-free formula distinguishes",
        ),
        Fixture(
            "undef-right",
            "preference",
            "Right model of the pair, identical but without preferences",
        ),
        Fixture(
            "battle-good-broad",
            "goodness",
            "Battle of cuisines, good worlds have a positive pay-off",
        ),
        Fixture(
            "battle-good-strict",
            "goodness",
            "Battle of cuisines, good worlds have the maximal pay-off; "
            "breaks coherence of potential emotions",
        ),
        Fixture(
            "gift-good",
            "goodness",
            "Gift scenario with gift and note delivered as the only good world",
        ),
        Fixture(
            "lottery-good",
            "goodness",
            "Lottery where each player's good world is their own win",
        ),
    )
)


def fixture_path(name: str) -> str:
    if name not in FIXTURES:
        raise UnknownModelError("'{0}' is not a built-in fixture".format(name))
    return path.join(path.dirname(__file__), "{0}.yaml".format(name))


@lru_cache(maxsize=None)
def load_fixture(name: str):
    """
    Loads, closes and validates the built-in fixture ``name``. Models are
    immutable, so the loaded instance is shared between callers.

    :raises: moodal.exceptions.UnknownModelError for unknown names.
    """
    from moodal.syntax.loader import load_model

    with open(fixture_path(name), "r") as fixture_file:
        return load_model(fixture_file.read(), name)
