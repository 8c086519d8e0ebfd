# -*- coding: utf-8 -*-

"""
moodal.semantics.evaluator

Satisfaction for the three model kinds. Evaluation works on extensions: the
set of worlds where each subformula holds is computed once, bottom-up, and
the modal clauses are decided on those sets.

Happiness H_aφ holds at w when (a) φ holds throughout a's block of w, (b) the
emotion's comparison between the worlds refuting φ and the worlds satisfying
φ succeeds, and (c) some world refutes φ. Only condition (b) differs between
the semantics; sadness reverses it. Condition (b) ranges over all worlds of
the model, not only over the agent's block.
"""
import abc
import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

from moodal.exceptions import (
    DegreeInGoodnessSemanticsError,
    DegreeInPreferenceSemanticsError,
    MissingDegreeError,
    SemanticsMismatchError,
)
from moodal.formula import (
    AGENT_NODES,
    EMOTIONS,
    Formula,
    Happy,
    HappyDeg,
    Implies,
    Knows,
    Nec,
    Not,
    Sad,
    SadDeg,
    Var,
    subformulas,
    walk,
)
from moodal.helpers import ordered_subset
from moodal.logging import ModelLoggerAdapter
from moodal.model.models import (
    GOODNESS,
    PREFERENCE,
    UTILITY,
    EpistemicModel,
    GoodnessModel,
    UtilityModel,
)
from moodal.model.transforms import preferences_from_utilities, set_prec
from moodal.semantics.verdict import (
    BOOLEAN,
    CONDITION_A,
    CONDITION_B,
    CONDITION_C,
    KNOWLEDGE,
    NECESSITY,
    TraceEntry,
    Verdict,
)

Worlds = FrozenSet[str]

SEMANTICS = {"pref": PREFERENCE, "util": UTILITY, "good": GOODNESS}


class Evaluator(metaclass=abc.ABCMeta):
    """
    Evaluator is the abstract base class of the satisfaction relations.

    An instance owns a memo table of extensions for one model and is meant to
    be used by a single caller. Reusing an instance across many formulas over
    the same model shares the extensions of common subformulas.

    :param model: The model to evaluate over.
    """

    model_type = None
    semantics = None

    def __init__(self, model):
        if not isinstance(model, self.model_type):
            raise SemanticsMismatchError(
                "{0} semantics cannot evaluate the {1} model '{2}'".format(
                    self.semantics, model.kind, model.name
                )
            )
        self.model = model
        self.logger = ModelLoggerAdapter.for_model(logging.getLogger(__name__), model)
        self._memo: Dict[Formula, Worlds] = {}
        self._partitions = {agent: self._partition(agent) for agent in model.agents}

    def _partition(self, agent: str) -> Tuple[Worlds, ...]:
        blocks = list(self.model.indist.get(agent, ()))
        covered = frozenset().union(*blocks) if blocks else frozenset()
        blocks.extend(
            frozenset([world]) for world in self.model.worlds if world not in covered
        )
        return tuple(blocks)

    @abc.abstractmethod
    def _check_emotion(self, node: Formula):
        """
        Raises if the emotion node ``node`` cannot be interpreted by this
        semantics.
        """
        pass  # pragma: no cover

    @abc.abstractmethod
    def _comparison_failure(
        self, node: Formula, satisfying: Worlds, refuting: Worlds
    ) -> Optional[Tuple[str, ...]]:
        """
        Decides condition (b) for the emotion ``node``.

        :returns: None when the condition holds, otherwise the worlds that
            break it, in declared world order.
        """
        pass  # pragma: no cover

    def check(self, formula: Formula):
        """
        Checks that every symbol of ``formula`` is declared in the model and
        that its emotion modalities suit this semantics.
        """
        for node in walk(formula):
            if isinstance(node, Var):
                self.model.check_variable(node.name)
            elif isinstance(node, AGENT_NODES):
                self.model.check_agent(node.agent)
                if isinstance(node, EMOTIONS):
                    self._check_emotion(node)

    def extension(self, formula: Formula) -> Worlds:
        """
        Returns the worlds where ``formula`` holds. Subformulas are computed
        bottom-up, so every lookup in ``_compute`` hits the memo.
        """
        try:
            return self._memo[formula]
        except KeyError:
            pass
        self.check(formula)
        for node in subformulas(formula):
            if node not in self._memo:
                self._memo[node] = self._compute(node)
        return self._memo[formula]

    def holds(self, world: str, formula: Formula) -> bool:
        self.model.check_world(world)
        return world in self.extension(formula)

    def valid(self, formula: Formula) -> bool:
        return self.extension(formula) == self.model.world_set

    def evaluate(self, world: str, formula: Formula, trace: bool = False) -> Verdict:
        """
        Evaluates ``formula`` at ``world``.

        :param trace: Also explain which clause decided each step; the first
            trace entry is the root and carries the overall outcome.
        """
        holds = self.holds(world, formula)
        self.logger.debug(
            "%s at %s: %s", formula, world, "holds" if holds else "fails"
        )
        return Verdict(
            holds=holds,
            formula=formula,
            world=world,
            trace=tuple(self._explain(formula, world)) if trace else None,
        )

    def _extension(self, formula: Formula) -> Worlds:
        try:
            return self._memo[formula]
        except KeyError:
            pass
        result = self._compute(formula)
        self._memo[formula] = result
        return result

    def _compute(self, formula: Formula) -> Worlds:
        everything = self.model.world_set
        if isinstance(formula, Var):
            return frozenset(self.model.valuation.get(formula.name, ())) & everything
        if isinstance(formula, Not):
            return everything - self._extension(formula.operand)
        if isinstance(formula, Implies):
            return (everything - self._extension(formula.antecedent)) | self._extension(
                formula.consequent
            )
        if isinstance(formula, Nec):
            return everything if self._extension(formula.operand) == everything else frozenset()
        if isinstance(formula, Knows):
            return self._known(formula.agent, self._extension(formula.operand))
        return self._emotion(formula)

    def _known(self, agent: str, satisfying: Worlds) -> Worlds:
        return frozenset(
            world
            for block in self._partitions[agent]
            if block <= satisfying
            for world in block
        )

    def _emotion(self, node: Formula) -> Worlds:
        satisfying = self._extension(node.operand)
        refuting = self.model.world_set - satisfying
        if not refuting:
            return frozenset()
        if self._comparison_failure(node, satisfying, refuting) is not None:
            return frozenset()
        return self._known(node.agent, satisfying)

    def _ordered(self, worlds) -> Tuple[str, ...]:
        return ordered_subset(self.model.worlds, worlds)

    def _explain(self, formula: Formula, world: str) -> List[TraceEntry]:
        holds = world in self._extension(formula)
        if isinstance(formula, Var):
            return [TraceEntry(formula, world, BOOLEAN, holds)]
        if isinstance(formula, Not):
            return [TraceEntry(formula, world, BOOLEAN, holds)] + self._explain(
                formula.operand, world
            )
        if isinstance(formula, Implies):
            entries = [TraceEntry(formula, world, BOOLEAN, holds)]
            entries += self._explain(formula.antecedent, world)
            if world in self._extension(formula.antecedent):
                entries += self._explain(formula.consequent, world)
            return entries

        satisfying = self._extension(formula.operand)
        if isinstance(formula, (Nec, Knows)):
            scope = (
                self.model.worlds
                if isinstance(formula, Nec)
                else self._ordered(self.model.block(formula.agent, world))
            )
            tag = NECESSITY if isinstance(formula, Nec) else KNOWLEDGE
            refuting = next((w for w in scope if w not in satisfying), None)
            if refuting is None:
                return [TraceEntry(formula, world, tag, holds)]
            return [
                TraceEntry(formula, world, tag, holds, (refuting,))
            ] + self._explain(formula.operand, refuting)

        block = self._ordered(self.model.block(formula.agent, world))
        outside = next((w for w in block if w not in satisfying), None)
        if outside is not None:
            return [
                TraceEntry(formula, world, CONDITION_A, holds, (outside,))
            ] + self._explain(formula.operand, outside)
        refuting = self.model.world_set - satisfying
        failure = (
            self._comparison_failure(formula, satisfying, refuting) if refuting else None
        )
        if failure is not None:
            return [TraceEntry(formula, world, CONDITION_B, holds, failure)]
        return [TraceEntry(formula, world, CONDITION_C, holds)]


class PreferenceEvaluator(Evaluator):
    """
    Condition (b) for H_aφ: every refuting world is ≺_a-below every satisfying
    world. For S_aφ the satisfying worlds are below the refuting ones.
    """

    model_type = EpistemicModel
    semantics = "pref"

    def _check_emotion(self, node):
        if isinstance(node, (HappyDeg, SadDeg)):
            raise DegreeInPreferenceSemanticsError(
                "Degree-indexed modality in preference semantics: {0}".format(node)
            )

    def _comparison_failure(self, node, satisfying, refuting):
        if isinstance(node, Happy):
            lower, upper = refuting, satisfying
        else:
            lower, upper = satisfying, refuting
        if set_prec(self.model, node.agent, lower, upper):
            return None
        return next(
            (u, v)
            for u in self._ordered(lower)
            for v in self._ordered(upper)
            if not self.model.prefers(node.agent, u, v)
        )


class UtilityEvaluator(Evaluator):
    """
    Condition (b) for H^d_aφ: u_a(v) + d ≤ u_a(v') for every refuting v and
    satisfying v'. For S^d_aφ the roles of v and v' swap.
    """

    model_type = UtilityModel
    semantics = "util"

    def _check_emotion(self, node):
        if isinstance(node, (Happy, Sad)):
            raise MissingDegreeError(
                "Utility semantics needs a degree on every emotion, "
                "e.g. H[a;0] instead of H[a]: {0}".format(node)
            )

    def _comparison_failure(self, node, satisfying, refuting):
        if not satisfying:
            return None
        if isinstance(node, HappyDeg):
            lower, upper = refuting, satisfying
        else:
            lower, upper = satisfying, refuting
        utility = self.model.utility[node.agent]
        if max(utility[w] for w in lower) + node.degree <= min(utility[w] for w in upper):
            return None
        return next(
            (u, v)
            for u in self._ordered(lower)
            for v in self._ordered(upper)
            if utility[u] + node.degree > utility[v]
        )


class GoodnessEvaluator(Evaluator):
    """
    Condition (b) for H_aφ: φ holds at every good world of a. For S_aφ, φ
    fails at every good world of a.
    """

    model_type = GoodnessModel
    semantics = "good"

    def _check_emotion(self, node):
        if isinstance(node, (HappyDeg, SadDeg)):
            raise DegreeInGoodnessSemanticsError(
                "Degree-indexed modality in goodness semantics: {0}".format(node)
            )

    def _comparison_failure(self, node, satisfying, refuting):
        good = self.model.good.get(node.agent, frozenset())
        offending = good - satisfying if isinstance(node, Happy) else good & satisfying
        if not offending:
            return None
        return self._ordered(offending)[:1]


EVALUATORS = {
    PREFERENCE: PreferenceEvaluator,
    UTILITY: UtilityEvaluator,
    GOODNESS: GoodnessEvaluator,
}


def evaluator_for(model, semantics: str = None) -> Evaluator:
    """
    Returns a fresh evaluator for ``model``.

    :param semantics: "pref", "util" or "good"; defaults to the semantics of
        the model kind. "pref" on a utility model evaluates over the
        preferences its utilities induce.
    :raises: moodal.exceptions.SemanticsMismatchError
    """
    if semantics is None:
        return EVALUATORS[model.kind](model)
    if semantics not in SEMANTICS:
        raise SemanticsMismatchError(
            "Unknown semantics '{0}', expected one of {1}".format(
                semantics, ", ".join(SEMANTICS)
            )
        )
    if semantics == "pref" and isinstance(model, UtilityModel):
        model = preferences_from_utilities(model)
    return EVALUATORS[SEMANTICS[semantics]](model)


def evaluate(model: EpistemicModel, world: str, formula: Formula, trace=False) -> Verdict:
    """
    Preference-based satisfaction.

    :raises: UnknownWorldError, UnknownAgentError, UnknownVariableError,
        DegreeInPreferenceSemanticsError
    """
    return PreferenceEvaluator(model).evaluate(world, formula, trace)


def evaluate_utility(model: UtilityModel, world: str, formula: Formula, trace=False) -> Verdict:
    """
    Utility-based satisfaction; every emotion must carry a degree.

    :raises: UnknownWorldError, MissingDegreeError
    """
    return UtilityEvaluator(model).evaluate(world, formula, trace)


def evaluate_goodness(model: GoodnessModel, world: str, formula: Formula, trace=False) -> Verdict:
    """
    Goodness-based satisfaction.

    :raises: UnknownWorldError, DegreeInGoodnessSemanticsError
    """
    return GoodnessEvaluator(model).evaluate(world, formula, trace)


def extension(model, formula: Formula) -> Worlds:
    return evaluator_for(model).extension(formula)


def valid_in_model(model, formula: Formula) -> bool:
    return evaluator_for(model).valid(formula)
