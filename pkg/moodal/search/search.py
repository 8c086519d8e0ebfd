# -*- coding: utf-8 -*-

"""
moodal.search.search

Bounded searches over enumerated models: witnesses for a formula, fragment
equivalence of two models, and pairs of models that a fragment cannot tell
apart while a formula outside the fragment can. Every positive result is
re-checked through the public evaluators before it is returned.
"""
import logging
from itertools import islice, product
from typing import Iterable, Iterator, List, Tuple

from moodal.context import DEFAULT_SEARCH_DEPTH, MoodalContext
from moodal.exceptions import (
    CapExceededError,
    SearchIntegrityError,
    SignatureMismatchError,
    TargetNotExcludedError,
)
from moodal.executor import SweepExecutor
from moodal.formula import (
    Formula,
    Fragment,
    count_formulas,
    enumerate_formulas,
    in_fragment,
    metrics,
    tau,
)
from moodal.helpers import ordered_subset
from moodal.logging import ModelLoggerAdapter
from moodal.model.models import EpistemicModel
from moodal.model.transforms import converse, with_preferences
from moodal.search.bounds import SearchBounds
from moodal.search.enumeration import enumerate_models, strict_orders, world_names
from moodal.search.report import (
    Distinguished,
    Equivalent,
    Exhausted,
    SeparatingPair,
    WitnessFound,
)
from moodal.semantics.evaluator import PreferenceEvaluator, evaluate

logger = logging.getLogger(__name__)

SATISFY = "satisfy"
REFUTE = "refute"
MODES = (SATISFY, REFUTE)

_BATCH = 256

_DUAL_FRAGMENTS = {
    Fragment.FULL: Fragment.FULL,
    Fragment.NO_SAD: Fragment.NO_HAPPY,
    Fragment.NO_HAPPY: Fragment.NO_SAD,
    Fragment.NO_EMOTION: Fragment.NO_EMOTION,
}


def _batches(items: Iterable, size: int = _BATCH) -> Iterator[List]:
    iterator = iter(items)
    while True:
        batch = list(islice(iterator, size))
        if not batch:
            return
        yield batch


def _check_signature(formula: Formula, bounds: SearchBounds):
    measured = metrics(formula)
    missing = sorted(
        (measured.agents_used - set(bounds.agents))
        | (measured.vars_used - set(bounds.variables))
    )
    if missing:
        raise SignatureMismatchError(
            "Formula {0} uses {1}, which the search bounds do not declare".format(
                formula, ", ".join(missing)
            )
        )


def _target_worlds(model, formula, mode) -> Tuple[str, ...]:
    evaluator = PreferenceEvaluator(model)
    satisfying = evaluator.extension(formula)
    wanted = satisfying if mode == SATISFY else model.world_set - satisfying
    return ordered_subset(model.worlds, wanted)


def find_model(
    formula: Formula,
    mode: str = SATISFY,
    bounds: SearchBounds = None,
    context: MoodalContext = None,
):
    """
    Returns the first enumerated model and world where ``formula`` holds
    (mode "satisfy") or fails (mode "refute"), or Exhausted.

    :raises: moodal.exceptions.CapExceededError
    """
    if mode not in MODES:
        raise ValueError("mode must be one of {0}".format(", ".join(MODES)))
    context = context or MoodalContext()
    bounds = bounds or SearchBounds.for_formula(formula, cap=context.cap)
    _check_signature(formula, bounds)
    executor = SweepExecutor(context.workers)

    examined = 0
    for batch in _batches(enumerate_models(bounds)):
        hit = executor.first(lambda model: bool(_target_worlds(model, formula, mode)), batch)
        if hit is None:
            examined += len(batch)
            continue
        model = batch[hit]
        examined += hit + 1
        world = _target_worlds(model, formula, mode)[0]
        if evaluate(model, world, formula).holds != (mode == SATISFY):
            raise SearchIntegrityError(
                "Witness for {0} does not re-check at {1}".format(formula, world)
            )
        logger.debug("Found a witness for %s after %d models", formula, examined)
        return WitnessFound(model, world, formula, mode, examined)

    return Exhausted(
        examined,
        bounds.max_worlds,
        "no model {0} {1}".format("satisfies" if mode == SATISFY else "refutes", formula),
    )


def _check_same_signature(left: EpistemicModel, right: EpistemicModel):
    if (
        left.world_set != right.world_set
        or set(left.agents) != set(right.agents)
        or set(left.variables) != set(right.variables)
    ):
        raise SignatureMismatchError(
            "Models '{0}' and '{1}' do not share worlds, agents and variables".format(
                left.name, right.name
            )
        )


def _first_disagreement(left, right, formulas, executor):
    """
    Returns (index, formula, world) of the first formula whose extensions
    differ between the models, or None.
    """

    def check(chunk):
        left_evaluator = PreferenceEvaluator(left)
        right_evaluator = PreferenceEvaluator(right)
        for index, formula in chunk:
            difference = left_evaluator.extension(formula) ^ right_evaluator.extension(
                formula
            )
            if difference:
                return [(index, formula, ordered_subset(left.worlds, difference)[0])]
        return []

    found = executor.map(check, list(enumerate(formulas)))
    return min(found, key=lambda hit: hit[0]) if found else None


def check_pair_equivalence(
    left: EpistemicModel,
    right: EpistemicModel,
    fragment: Fragment = Fragment.FULL,
    max_depth: int = DEFAULT_SEARCH_DEPTH,
    context: MoodalContext = None,
):
    """
    Compares the models on every formula of ``fragment`` up to ``max_depth``
    at every world.

    :returns: Distinguished for the first formula in enumeration order that
        tells the models apart, otherwise Equivalent.
    :raises: moodal.exceptions.SignatureMismatchError
    :raises: moodal.exceptions.CapExceededError
    """
    context = context or MoodalContext()
    _check_same_signature(left, right)
    count = count_formulas(len(left.variables), len(left.agents), max_depth, fragment)
    if count > context.cap:
        raise CapExceededError("formulas", count, context.cap)

    formulas = enumerate_formulas(left.variables, left.agents, max_depth, fragment)
    hit = _first_disagreement(left, right, formulas, SweepExecutor(context.workers))
    if hit is None:
        ModelLoggerAdapter.for_model(logger, left).debug(
            "Agrees with '%s' on %d formulas", right.name, count
        )
        return Equivalent(count, max_depth, fragment)

    index, formula, world = hit
    left_holds = evaluate(left, world, formula).holds
    right_holds = evaluate(right, world, formula).holds
    if left_holds == right_holds:
        raise SearchIntegrityError(
            "Distinguishing formula {0} does not re-check at {1}".format(formula, world)
        )
    return Distinguished(formula, world, left_holds, right_holds, index + 1, max_depth)


def _verify_pair(pair: SeparatingPair, context: MoodalContext):
    left_holds = evaluate(pair.left, pair.world, pair.formula).holds
    right_holds = evaluate(pair.right, pair.world, pair.formula).holds
    agreement = check_pair_equivalence(
        pair.left, pair.right, pair.fragment, pair.depth, context
    )
    if left_holds == right_holds or not isinstance(agreement, Equivalent):
        raise SearchIntegrityError(
            "Separating pair for {0} does not re-check".format(pair.formula)
        )


def _preference_variants(model: EpistemicModel) -> Iterator[EpistemicModel]:
    worlds = world_names(len(model.worlds))
    for index, orders in enumerate(
        product(strict_orders(len(worlds)), repeat=len(model.agents))
    ):
        pref = {
            agent: frozenset((worlds[lower], worlds[upper]) for lower, upper in order)
            for agent, order in zip(model.agents, orders)
        }
        if pref != dict(model.pref):
            yield with_preferences(model, pref, "{0}-p{1}".format(model.name, index))


def find_separating_pair(
    fragment: Fragment,
    target: Formula,
    bounds: SearchBounds = None,
    context: MoodalContext = None,
):
    """
    Searches for two models that share worlds, partitions and valuation but
    differ in preferences, agree on every formula of ``fragment`` up to
    ``bounds.max_formula_depth``, and disagree on ``target`` at some world.

    :raises: moodal.exceptions.TargetNotExcludedError if ``target`` belongs to
        ``fragment``.
    :raises: moodal.exceptions.CapExceededError
    """
    if in_fragment(target, fragment):
        raise TargetNotExcludedError(
            "{0} belongs to the {1} fragment, so no pair can separate it".format(
                target, fragment.value
            )
        )
    context = context or MoodalContext()
    bounds = bounds or SearchBounds.for_formula(target, cap=context.cap)
    _check_signature(target, bounds)
    depth = bounds.max_formula_depth

    examined = 0
    for left in enumerate_models(bounds):
        for right in _preference_variants(left):
            examined += 1
            if examined > bounds.cap:
                raise CapExceededError("model pairs", examined, bounds.cap)
            difference = PreferenceEvaluator(left).extension(
                target
            ) ^ PreferenceEvaluator(right).extension(target)
            if not difference:
                continue
            agreement = check_pair_equivalence(left, right, fragment, depth, context)
            if not isinstance(agreement, Equivalent):
                continue
            pair = SeparatingPair(
                left=left,
                right=right,
                formula=target,
                world=ordered_subset(left.worlds, difference)[0],
                fragment=fragment,
                depth=depth,
                formulas_checked=agreement.formulas_checked,
                pairs_examined=examined,
            )
            _verify_pair(pair, context)
            logger.debug("Found a separating pair after %d pairs", examined)
            return pair

    return Exhausted(
        examined,
        bounds.max_worlds,
        "no pair of models separates {0} from the {1} fragment up to depth {2}".format(
            target, fragment.value, depth
        ),
    )


def dual_witness(pair: SeparatingPair, context: MoodalContext = None) -> SeparatingPair:
    """
    Transfers a separating pair across the happiness/sadness duality: both
    models are replaced by their converses, the target by its translation and
    the fragment by its dual. The result is re-checked.
    """
    dual = SeparatingPair(
        left=converse(pair.left),
        right=converse(pair.right),
        formula=tau(pair.formula),
        world=pair.world,
        fragment=_DUAL_FRAGMENTS[pair.fragment],
        depth=pair.depth,
        formulas_checked=pair.formulas_checked,
        pairs_examined=pair.pairs_examined,
    )
    _verify_pair(dual, context or MoodalContext())
    return dual
