# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Tuple

from moodal.context import DEFAULT_CAP, DEFAULT_SEARCH_DEPTH
from moodal.exceptions import SearchBoundsError
from moodal.formula import Formula, metrics


@dataclass(frozen=True)
class SearchBounds(object):
    """
    Limits of a bounded search.

    :param max_worlds: Largest number of worlds of an enumerated model.
    :param agents: Agents of every enumerated model.
    :param variables: Variables of every enumerated model.
    :param max_formula_depth: Depth of the formulas compared between models.
    :param cap: Largest number of candidate models the search may consider.
    :param min_worlds: Smallest number of worlds of an enumerated model.
    """

    max_worlds: int = 3
    agents: Tuple[str, ...] = ("a",)
    variables: Tuple[str, ...] = ("p",)
    max_formula_depth: int = DEFAULT_SEARCH_DEPTH
    cap: int = DEFAULT_CAP
    min_worlds: int = 1

    def __post_init__(self):
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.min_worlds < 1 or self.max_worlds < self.min_worlds:
            raise SearchBoundsError(
                "World bounds must satisfy 1 <= min_worlds <= max_worlds, got "
                "{0}..{1}".format(self.min_worlds, self.max_worlds)
            )
        if not self.agents or not self.variables:
            raise SearchBoundsError("Search bounds need at least one agent and one variable")
        if len(set(self.agents)) != len(self.agents) or len(set(self.variables)) != len(
            self.variables
        ):
            raise SearchBoundsError("Search bounds repeat an agent or a variable")
        if self.max_formula_depth < 0:
            raise SearchBoundsError("Formula depth must be nonnegative")
        if self.cap < 1:
            raise SearchBoundsError("The cap must be positive")

    @classmethod
    def for_formula(cls, formula: Formula, **kwargs) -> "SearchBounds":
        """
        Bounds whose signature is exactly the agents and variables of
        ``formula`` (falling back to the defaults when it uses none).
        """
        measured = metrics(formula)
        kwargs.setdefault("agents", tuple(sorted(measured.agents_used)) or ("a",))
        kwargs.setdefault("variables", tuple(sorted(measured.vars_used)) or ("p",))
        return cls(**kwargs)

    def to_dict(self):
        return {
            "min_worlds": self.min_worlds,
            "max_worlds": self.max_worlds,
            "agents": list(self.agents),
            "vars": list(self.variables),
            "max_formula_depth": self.max_formula_depth,
            "cap": self.cap,
        }
