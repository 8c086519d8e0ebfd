# -*- coding: utf-8 -*-

"""
moodal.axioms.sweep

Checks axiom schemas on a concrete model by instantiating them with every
enumerated formula over the model's signature and testing each instance for
validity in the model.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass, field
from itertools import islice, product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from moodal.context import MoodalContext
from moodal.exceptions import (
    CapExceededError,
    SearchIntegrityError,
    SemanticsMismatchError,
)
from moodal.executor import SweepExecutor
from moodal.formula import (
    Formula,
    Happy,
    Implies,
    Knows,
    Nec,
    Var,
    count_formulas,
    enumerate_formulas,
)
from moodal.helpers import ordered_subset
from moodal.logging import ModelLoggerAdapter
from moodal.model.models import UtilityModel
from moodal.axioms.schemas import (
    ALL_SCHEMAS,
    DERIVED_SCHEMAS,
    AxiomFamily,
    AxiomSchema,
)
from moodal.semantics.evaluator import evaluator_for

logger = logging.getLogger(__name__)

MODUS_PONENS = "modus-ponens"
NECESSITATION = "necessitation"


@dataclass(frozen=True)
class Failure(object):
    """
    An instance that is not valid in the model.

    :param schema: Name of the schema or rule.
    :param agent: The agent slot, or None.
    :param substitution: The formulas filling the slots.
    :param instance: The formula that was checked.
    :param worlds: The worlds refuting ``instance``, in declared order.
    """

    schema: str
    agent: Optional[str]
    substitution: Tuple[Formula, ...]
    instance: Formula
    worlds: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "agent": self.agent,
            "substitution": [str(formula) for formula in self.substitution],
            "instance": str(self.instance),
            "worlds": list(self.worlds),
        }

    def __str__(self):
        return "{0}{1}: {2} fails at {3}".format(
            self.schema,
            " ({0})".format(self.agent) if self.agent else "",
            self.instance,
            ", ".join(self.worlds),
        )


@dataclass(frozen=True)
class SchemaSummary(object):
    schema: str
    instances: int
    failures: int
    truncated: bool = False

    @property
    def status(self) -> str:
        return "FAILED" if self.failures else "PASSED"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "instances": self.instances,
            "failures": self.failures,
            "truncated": self.truncated,
        }


@dataclass(frozen=True)
class SoundnessReport(object):
    """
    The outcome of a sweep: ``ok`` holds exactly when no instance failed.
    """

    model_name: str
    max_depth: int
    summaries: Tuple[SchemaSummary, ...] = field(default_factory=tuple)
    failures: Tuple[Failure, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def schemas(self) -> Tuple[str, ...]:
        return tuple(summary.schema for summary in self.summaries)

    @property
    def instance_count(self) -> int:
        return sum(summary.instances for summary in self.summaries)

    @property
    def truncated(self) -> Tuple[str, ...]:
        return tuple(s.schema for s in self.summaries if s.truncated)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model_name,
            "max_depth": self.max_depth,
            "ok": self.ok,
            "instances": self.instance_count,
            "schemas": [summary.to_dict() for summary in self.summaries],
            "failures": [failure.to_dict() for failure in self.failures],
        }

    def summary_table(self) -> str:
        width = max([len("schema")] + [len(name) for name in self.schemas])
        lines = [
            "{0:<{w}}  {1:>9}  {2:>8}  {3}".format(
                "schema", "instances", "failures", "status", w=width
            )
        ]
        for summary in self.summaries:
            lines.append(
                "{0:<{w}}  {1:>9}  {2:>8}  {3}{4}".format(
                    summary.schema,
                    summary.instances,
                    summary.failures,
                    summary.status,
                    " TRUNCATED" if summary.truncated else "",
                    w=width,
                )
            )
        return "\n".join(lines)

    def __str__(self):
        shown = 20
        lines = [
            "{0}: {1} instances up to depth {2}, {3} failures".format(
                self.model_name, self.instance_count, self.max_depth, len(self.failures)
            ),
            self.summary_table(),
        ]
        lines.extend(str(failure) for failure in self.failures[:shown])
        if len(self.failures) > shown:
            lines.append("... and {0} more".format(len(self.failures) - shown))
        return "\n".join(lines)


_Plan = namedtuple("_Plan", ["schema", "instances", "truncated"])


def _formulas(model, max_depth: int, context: MoodalContext) -> List[Formula]:
    count = count_formulas(len(model.variables), len(model.agents), max_depth)
    if count > context.cap:
        raise CapExceededError("formulas", count, context.cap)
    return list(enumerate_formulas(model.variables, model.agents, max_depth))


def _plan(schema: AxiomSchema, agents, formulas, pair_cap: int) -> _Plan:
    agent_slots = agents if schema.uses_agent else (None,)
    if schema.arity == 1:
        instances = [
            (agent, (phi,)) for phi in formulas for agent in agent_slots
        ]
        return _Plan(schema, instances, False)
    total = len(formulas) ** 2 * len(agent_slots)
    pairs = (
        (agent, (phi, psi))
        for phi, psi in product(formulas, repeat=2)
        for agent in agent_slots
    )
    return _Plan(schema, list(islice(pairs, pair_cap)), total > pair_cap)


def _check_sweepable(model):
    if isinstance(model, UtilityModel):
        raise SemanticsMismatchError(
            "Axiom schemas use emotions without degrees; utility model '{0}' "
            "cannot interpret them".format(model.name)
        )


def _refuting(model, evaluator, formula) -> Tuple[str, ...]:
    return ordered_subset(model.worlds, model.world_set - evaluator.extension(formula))


def _sweep(model, schemas, max_depth: int, context: Optional[MoodalContext]):
    _check_sweepable(model)
    context = context or MoodalContext()
    model_logger = ModelLoggerAdapter.for_model(logger, model)
    formulas = _formulas(model, max_depth, context)

    plans = [_plan(schema, model.agents, formulas, context.pair_cap) for schema in schemas]
    total = sum(len(plan.instances) for plan in plans)
    if total > context.cap:
        raise CapExceededError("axiom instances", total, context.cap)
    for plan in plans:
        if plan.truncated:
            model_logger.warning(
                "%s truncated to the first %d instances", plan.schema, context.pair_cap
            )

    executor = SweepExecutor(context.workers)
    summaries = []
    failures = []
    for plan in plans:

        def check(chunk, schema=plan.schema):
            evaluator = evaluator_for(model)
            found = []
            for agent, substitution in chunk:
                instance = schema.instantiate(agent, *substitution)
                worlds = _refuting(model, evaluator, instance)
                if worlds:
                    found.append(
                        Failure(schema.name, agent, substitution, instance, worlds)
                    )
            return found

        found = executor.map(check, plan.instances)
        model_logger.debug(
            "%s: %d instances, %d failures", plan.schema, len(plan.instances), len(found)
        )
        summaries.append(
            SchemaSummary(plan.schema.name, len(plan.instances), len(found), plan.truncated)
        )
        failures.extend(found)

    return SoundnessReport(model.name, max_depth, tuple(summaries), tuple(failures))


def soundness_sweep(
    model,
    max_depth: int,
    context: MoodalContext = None,
    schemas: Sequence[AxiomSchema] = ALL_SCHEMAS,
) -> SoundnessReport:
    """
    Instantiates ``schemas`` with every formula up to ``max_depth`` over the
    model's own variables and agents, and collects the instances that are not
    valid in the model. Two-slot schemas are truncated to the context's pair
    cap in enumeration order.

    :raises: moodal.exceptions.CapExceededError when the formula or instance
        count exceeds the context's cap.
    """
    return _sweep(model, schemas, max_depth, context)


def derived_fact_sweep(
    model, max_depth: int, context: MoodalContext = None
) -> SoundnessReport:
    """
    Sweeps the derived facts: emotions imply knowledge, and positive
    introspection of N and K.
    """
    return _sweep(model, DERIVED_SCHEMAS, max_depth, context)


def rule_preservation_check(
    model, max_depth: int, context: MoodalContext = None
) -> SoundnessReport:
    """
    Spot-checks that modus ponens and necessitation keep validity in the
    model: whenever φ and φ → ψ are valid so is ψ, and whenever φ is valid so
    are Nφ and K_aφ for every agent.
    """
    _check_sweepable(model)
    context = context or MoodalContext()
    formulas = _formulas(model, max_depth, context)
    evaluator = evaluator_for(model)

    valid = [formula for formula in formulas if evaluator.valid(formula)]
    pairs = list(islice(product(valid, formulas), context.pair_cap))
    truncated = len(valid) * len(formulas) > context.pair_cap

    ponens = []
    for phi, psi in pairs:
        if evaluator.valid(Implies(phi, psi)):
            worlds = _refuting(model, evaluator, psi)
            if worlds:
                ponens.append(Failure(MODUS_PONENS, None, (phi, psi), psi, worlds))

    necessitation = []
    checked = 0
    for phi in valid:
        conclusions = [(None, Nec(phi))]
        conclusions.extend((agent, Knows(agent, phi)) for agent in model.agents)
        for agent, conclusion in conclusions:
            checked += 1
            worlds = _refuting(model, evaluator, conclusion)
            if worlds:
                necessitation.append(
                    Failure(NECESSITATION, agent, (phi,), conclusion, worlds)
                )

    return SoundnessReport(
        model.name,
        max_depth,
        (
            SchemaSummary(MODUS_PONENS, len(pairs), len(ponens), truncated),
            SchemaSummary(NECESSITATION, checked, len(necessitation)),
        ),
        tuple(ponens + necessitation),
    )


class CoherenceCounterexample(
    namedtuple("CoherenceCounterexample", ["model", "formula", "world"])
):
    def to_dict(self) -> Dict[str, Any]:
        return {
            "counterexample": self.model.name,
            "formula": str(self.formula),
            "world": self.world,
        }

    def __str__(self):
        return "counterexample: {0} fails at {1} in {2}".format(
            self.formula, self.world, self.model.name
        )


def goodness_coherence_counterexample() -> CoherenceCounterexample:
    """
    Returns a goodness model, an instance of coherence of potential emotions
    and a world where the instance fails: in the battle of cuisines with
    maximal pay-offs as good worlds, Sanaz can be happy both that she is in
    the Russian restaurant and that both are in the same restaurant, although
    neither fact implies the other.

    :raises: moodal.exceptions.SearchIntegrityError if the triple does not
        re-check.
    """
    from moodal.fixtures import load_fixture

    model = load_fixture("battle-good-strict")
    phi, psi = Var("rus_s"), Var("same")
    formula = AxiomSchema(AxiomFamily.COHERENCE_SAME, "H").instantiate("s", phi, psi)
    world = "(R,R)"

    evaluator = evaluator_for(model)
    if (
        evaluator.holds(world, formula)
        or not evaluator.holds(world, Happy("s", phi))
        or not evaluator.holds(world, Happy("s", psi))
    ):
        raise SearchIntegrityError(
            "Coherence counterexample does not re-check on {0}".format(model.name)
        )
    return CoherenceCounterexample(model, formula, world)
