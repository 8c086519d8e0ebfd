# -*- coding: utf-8 -*-

"""
moodal.model.models

The three finite model variants the semantics evaluate over. Models are plain
frozen dataclasses: construction never validates, so ``validate`` can report
on any structure, including deliberately broken ones.
"""
from dataclasses import dataclass, field
from decimal import Decimal
from functools import cached_property
from typing import Dict, FrozenSet, Mapping, Tuple

from moodal.exceptions import (
    UnknownAgentError,
    UnknownVariableError,
    UnknownWorldError,
)

Block = FrozenSet[str]
Partition = Tuple[Block, ...]
Pair = Tuple[str, str]

PREFERENCE = "preference"
UTILITY = "utility"
GOODNESS = "goodness"
KINDS = (PREFERENCE, UTILITY, GOODNESS)


@dataclass(frozen=True)
class BaseModel(object):
    """
    Worlds, per-agent indistinguishability partitions and a valuation.

    :param name: Label used in logs and reports; ignored by equality.
    :param agents: Agent identifiers in declaration order.
    :param variables: Propositional variables in declaration order.
    :param worlds: World identifiers in declaration order.
    :param indist: Agent to partition of ``worlds`` into blocks.
    :param valuation: Variable to the set of worlds where it is true.
    """

    name: str = field(compare=False)
    agents: Tuple[str, ...]
    variables: Tuple[str, ...]
    worlds: Tuple[str, ...]
    indist: Mapping[str, Partition]
    valuation: Mapping[str, FrozenSet[str]]

    kind = None

    @cached_property
    def world_set(self) -> FrozenSet[str]:
        return frozenset(self.worlds)

    @cached_property
    def _blocks(self) -> Dict[str, Dict[str, Block]]:
        lookup = {}
        for agent, partition in self.indist.items():
            lookup[agent] = {world: block for block in partition for world in block}
        return lookup

    def check_world(self, world: str) -> str:
        if world not in self.world_set:
            raise UnknownWorldError(
                "World '{0}' is not declared in model '{1}'".format(world, self.name)
            )
        return world

    def check_agent(self, agent: str) -> str:
        if agent not in self.agents:
            raise UnknownAgentError(
                "Agent '{0}' is not declared in model '{1}'".format(agent, self.name)
            )
        return agent

    def check_variable(self, variable: str) -> str:
        if variable not in self.variables:
            raise UnknownVariableError(
                "Variable '{0}' is not declared in model '{1}'".format(
                    variable, self.name
                )
            )
        return variable

    def block(self, agent: str, world: str) -> Block:
        """
        Returns the worlds ``agent`` cannot distinguish from ``world``.
        """
        self.check_agent(agent)
        self.check_world(world)
        return self._blocks.get(agent, {}).get(world, frozenset([world]))

    def truth_set(self, variable: str) -> FrozenSet[str]:
        self.check_variable(variable)
        return frozenset(self.valuation.get(variable, frozenset()))

    def __str__(self):
        return "{0} model '{1}' ({2} worlds)".format(
            self.kind, self.name, len(self.worlds)
        )


@dataclass(frozen=True)
class EpistemicModel(BaseModel):
    """
    An epistemic model with a strict partial order preference per agent.
    ``pref[a]`` holds pairs (u, v) meaning u ≺_a v, already transitively closed.
    """

    pref: Mapping[str, FrozenSet[Pair]] = field(default_factory=dict)

    kind = PREFERENCE

    def prefers(self, agent: str, lower: str, upper: str) -> bool:
        return (lower, upper) in self.pref.get(agent, frozenset())


@dataclass(frozen=True)
class UtilityModel(BaseModel):
    """
    An epistemic model where every agent assigns an exact decimal utility to
    every world.
    """

    utility: Mapping[str, Mapping[str, Decimal]] = field(default_factory=dict)

    kind = UTILITY


@dataclass(frozen=True)
class GoodnessModel(BaseModel):
    """
    An epistemic model where every agent designates a nonempty set of good worlds.
    """

    good: Mapping[str, FrozenSet[str]] = field(default_factory=dict)

    kind = GOODNESS


def normalise_partition(worlds, blocks) -> Partition:
    """
    Returns ``blocks`` as frozensets ordered by the position of their earliest
    world in ``worlds``. Worlds outside ``worlds`` sort last.
    """
    position = {world: index for index, world in enumerate(worlds)}
    frozen = [frozenset(block) for block in blocks]
    return tuple(
        sorted(
            frozen,
            key=lambda block: min(
                (position.get(world, len(position)) for world in block),
                default=len(position),
            ),
        )
    )
