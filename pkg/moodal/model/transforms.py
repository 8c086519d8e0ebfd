# -*- coding: utf-8 -*-

"""
moodal.model.transforms

Operations that derive one model from another, plus the set-lifted
preference comparison U ≺_a V.
"""
import logging
from dataclasses import replace
from typing import Iterable, Mapping

from moodal.exceptions import MoodalException
from moodal.model.models import EpistemicModel, GoodnessModel, UtilityModel

logger = logging.getLogger(__name__)

GOOD_WORLD_MODES = ("positive", "maximal")


def converse(model: EpistemicModel) -> EpistemicModel:
    """
    Returns the model with every agent's preference relation reversed.
    Worlds, partitions and valuation are shared unchanged.
    """
    return replace(
        model,
        pref={
            agent: frozenset((upper, lower) for lower, upper in pairs)
            for agent, pairs in model.pref.items()
        },
    )


def with_preferences(model: EpistemicModel, pref: Mapping, name: str = None) -> EpistemicModel:
    return replace(
        model,
        name=name if name is not None else model.name,
        pref={agent: frozenset(pairs) for agent, pairs in pref.items()},
    )


def preferences_from_utilities(model: UtilityModel) -> EpistemicModel:
    """
    Orders worlds by utility: u ≺_a v exactly when u_a(u) < u_a(v).
    """
    pref = {}
    for agent in model.agents:
        values = model.utility.get(agent, {})
        pref[agent] = frozenset(
            (lower, upper)
            for lower in model.worlds
            for upper in model.worlds
            if lower in values and upper in values and values[lower] < values[upper]
        )
    return EpistemicModel(
        name=model.name,
        agents=model.agents,
        variables=model.variables,
        worlds=model.worlds,
        indist=model.indist,
        valuation=model.valuation,
        pref=pref,
    )


def good_worlds_from_utilities(model: UtilityModel, mode: str = "positive") -> GoodnessModel:
    """
    Designates good worlds from utilities.

    :param mode: "positive" keeps the worlds with a positive pay-off, "maximal"
        keeps the worlds with the agent's highest pay-off.
    """
    if mode not in GOOD_WORLD_MODES:
        raise MoodalException(
            "Unknown good-world mode '{0}', expected one of {1}".format(
                mode, ", ".join(GOOD_WORLD_MODES)
            )
        )
    good = {}
    for agent in model.agents:
        values = model.utility.get(agent, {})
        if mode == "positive":
            chosen = [world for world in model.worlds if values.get(world, 0) > 0]
        else:
            best = max((values[world] for world in model.worlds if world in values), default=None)
            chosen = [world for world in model.worlds if best is not None and values.get(world) == best]
        good[agent] = frozenset(chosen)
    return GoodnessModel(
        name="{0}-{1}".format(model.name, mode),
        agents=model.agents,
        variables=model.variables,
        worlds=model.worlds,
        indist=model.indist,
        valuation=model.valuation,
        good=good,
    )


def set_prec(
    model: EpistemicModel, agent: str, lower: Iterable[str], upper: Iterable[str]
) -> bool:
    """
    Returns whether every world of ``lower`` is ≺_agent-below every world of
    ``upper``. Vacuously true when either set is empty.

    :raises: moodal.exceptions.UnknownWorldError, UnknownAgentError
    """
    model.check_agent(agent)
    lower = [model.check_world(world) for world in lower]
    upper = [model.check_world(world) for world in upper]
    pairs = model.pref.get(agent, frozenset())
    return all((u, v) in pairs for u in lower for v in upper)
