# -*- coding: utf-8 -*-

"""
moodal.model.validation

Checks every invariant of the three model kinds and reports the violations
as data.
"""
import logging
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Any, Dict, List, Tuple

from moodal.helpers import first_duplicate
from moodal.logging import ModelLoggerAdapter
from moodal.model.models import EpistemicModel, GoodnessModel, UtilityModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation(object):
    rule: str
    message: str
    elements: Tuple[Any, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule": self.rule,
            "message": self.message,
            "elements": [list(e) if isinstance(e, tuple) else e for e in self.elements],
        }


@dataclass(frozen=True)
class ValidationReport(object):
    """
    The outcome of ``validate``: ``ok`` holds exactly when nothing was violated.
    """

    model_name: str
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def rules(self) -> Tuple[str, ...]:
        seen = []
        for violation in self.violations:
            if violation.rule not in seen:
                seen.append(violation.rule)
        return tuple(seen)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model_name,
            "ok": self.ok,
            "violations": [violation.to_dict() for violation in self.violations],
        }

    def __str__(self):
        if self.ok:
            return "{0}: ok".format(self.model_name)
        lines = ["{0}: invalid ({1})".format(self.model_name, ", ".join(self.rules))]
        lines.extend(
            "  {0}: {1}".format(violation.rule, violation.message)
            for violation in self.violations
        )
        return "\n".join(lines)


class _Collector(object):
    def __init__(self):
        self.violations: List[Violation] = []

    def add(self, rule, message, *elements):
        self.violations.append(Violation(rule, message, tuple(elements)))


def _check_signature(model, collect):
    for label, items in (
        ("agents", model.agents),
        ("vars", model.variables),
        ("worlds", model.worlds),
    ):
        if not items:
            collect.add("nonempty " + label, "No {0} are declared".format(label))
        duplicate = first_duplicate(items)
        if duplicate is not None:
            collect.add(
                "duplicate identifier",
                "'{0}' is declared twice in {1}".format(duplicate, label),
                duplicate,
            )


def _check_agent_keys(model, mapping, label, collect):
    for agent in mapping:
        if agent not in model.agents:
            collect.add(
                "unknown agent",
                "{0} names undeclared agent '{1}'".format(label, agent),
                agent,
            )
    for agent in model.agents:
        if agent not in mapping:
            collect.add(
                "missing agent",
                "{0} has no entry for agent '{1}'".format(label, agent),
                agent,
            )


def _check_partitions(model, collect):
    _check_agent_keys(model, model.indist, "indist", collect)
    worlds = model.world_set
    for agent, partition in model.indist.items():
        seen = set()
        for block in partition:
            if not block:
                collect.add(
                    "nonempty block",
                    "Agent '{0}' has an empty indistinguishability block".format(agent),
                    agent,
                )
            for world in sorted(block):
                if world not in worlds:
                    collect.add(
                        "unknown world",
                        "Block of agent '{0}' names unknown world '{1}'".format(
                            agent, world
                        ),
                        world,
                    )
            overlap = seen & set(block)
            if overlap:
                collect.add(
                    "disjoint blocks",
                    "Blocks of agent '{0}' share worlds {1}".format(
                        agent, sorted(overlap)
                    ),
                    *sorted(overlap)
                )
            seen |= set(block)
        uncovered = [world for world in model.worlds if world not in seen]
        if uncovered:
            collect.add(
                "cover worlds",
                "Blocks of agent '{0}' miss worlds {1}".format(agent, uncovered),
                *uncovered
            )


def _check_valuation(model, collect):
    worlds = model.world_set
    for variable, truths in model.valuation.items():
        if variable not in model.variables:
            collect.add(
                "unknown variable",
                "Valuation names undeclared variable '{0}'".format(variable),
                variable,
            )
        for world in sorted(truths):
            if world not in worlds:
                collect.add(
                    "unknown world",
                    "Valuation of '{0}' names unknown world '{1}'".format(
                        variable, world
                    ),
                    world,
                )


def _check_preferences(model: EpistemicModel, collect):
    _check_agent_keys(model, model.pref, "pref", collect)
    worlds = model.world_set
    for agent, pairs in model.pref.items():
        for pair in sorted(pairs):
            for world in pair:
                if world not in worlds:
                    collect.add(
                        "unknown world",
                        "Preference {0} of agent '{1}' names unknown world '{2}'".format(
                            pair, agent, world
                        ),
                        world,
                    )
        for lower, upper in sorted(pairs):
            if lower == upper:
                collect.add(
                    "irreflexivity",
                    "Agent '{0}' prefers world '{1}' to itself".format(agent, lower),
                    lower,
                )
        successors = {}
        for lower, upper in pairs:
            successors.setdefault(lower, set()).add(upper)
        for lower, upper in sorted(pairs):
            for beyond in sorted(successors.get(upper, ())):
                if (lower, beyond) not in pairs:
                    collect.add(
                        "transitivity",
                        "Agent '{0}' has {1} < {2} < {3} but not {1} < {3}".format(
                            agent, lower, upper, beyond
                        ),
                        (lower, upper),
                        (upper, beyond),
                    )


def _check_utilities(model: UtilityModel, collect):
    _check_agent_keys(model, model.utility, "utility", collect)
    worlds = model.world_set
    for agent, values in model.utility.items():
        for world in sorted(values):
            if world not in worlds:
                collect.add(
                    "unknown world",
                    "Utility of agent '{0}' names unknown world '{1}'".format(
                        agent, world
                    ),
                    world,
                )
        missing = [world for world in model.worlds if world not in values]
        if missing:
            collect.add(
                "total utility",
                "Agent '{0}' has no utility for worlds {1}".format(agent, missing),
                *missing
            )
        for world in model.worlds:
            value = values.get(world)
            if value is None:
                continue
            if (
                isinstance(value, bool)
                or not isinstance(value, (Decimal, int))
                or not Decimal(value).is_finite()
            ):
                collect.add(
                    "finite utility",
                    "Utility of agent '{0}' at world '{1}' is not a finite "
                    "number: {2}".format(agent, world, value),
                    world,
                )


def _check_goodness(model: GoodnessModel, collect):
    _check_agent_keys(model, model.good, "good", collect)
    worlds = model.world_set
    for agent, good in model.good.items():
        if not good:
            collect.add(
                "nonempty good set",
                "Agent '{0}' has no good worlds".format(agent),
                agent,
            )
        for world in sorted(good):
            if world not in worlds:
                collect.add(
                    "unknown world",
                    "Good worlds of agent '{0}' name unknown world '{1}'".format(
                        agent, world
                    ),
                    world,
                )


def validate(model) -> ValidationReport:
    """
    Lists every violated invariant of ``model``. Never raises for malformed
    content; an empty report means the model is well formed.

    :param model: An EpistemicModel, UtilityModel or GoodnessModel.
    :returns: The ValidationReport.
    """
    collect = _Collector()
    _check_signature(model, collect)
    _check_partitions(model, collect)
    _check_valuation(model, collect)
    if isinstance(model, EpistemicModel):
        _check_preferences(model, collect)
    elif isinstance(model, UtilityModel):
        _check_utilities(model, collect)
    elif isinstance(model, GoodnessModel):
        _check_goodness(model, collect)

    report = ValidationReport(model.name, tuple(collect.violations))
    if not report.ok:
        ModelLoggerAdapter.for_model(logger, model).debug(
            "Validation found %d violations: %s",
            len(report.violations),
            ", ".join(report.rules),
        )
    return report
