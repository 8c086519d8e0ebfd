# -*- coding: utf-8 -*-

"""
moodal.formula

The formula language: an immutable AST over variables, negation, implication,
the universal modality N, knowledge K, happiness H and sadness S (optionally
indexed by a utility degree), plus the fragments of the language, the
happiness/sadness duality translation and bounded formula enumeration.

Derived connectives are constructor functions that expand to primitives, so
every Formula tree contains primitive nodes only.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from enum import Enum
from functools import partial
from typing import Iterable, Iterator, List, Sequence, Tuple

from moodal.exceptions import DegreeUnsupportedError, NegativeDegreeError

logger = logging.getLogger(__name__)

_node = partial(dataclass, frozen=True, eq=False)


@_node
class Formula(object):
    """
    Base class of all formula nodes.

    Nodes compare structurally. The hash and the depth are computed once at
    construction, which keeps memo tables keyed by formulas cheap.
    """

    def __post_init__(self):
        values = self._values()
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + values))
        object.__setattr__(
            self,
            "_depth",
            1 + max(child._depth for child in self.children) if self.children else 0,
        )

    def _values(self) -> tuple:
        return tuple(getattr(self, name) for name in self.__dataclass_fields__)

    @property
    def children(self) -> Tuple["Formula", ...]:
        return ()

    @property
    def depth(self) -> int:
        return self._depth

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return self._hash == other._hash and self._values() == other._values()

    def __str__(self):
        from moodal.syntax.printer import print_formula

        return print_formula(self)


@_node
class Var(Formula):
    name: str


@_node
class Not(Formula):
    operand: Formula

    @property
    def children(self):
        return (self.operand,)


@_node
class Implies(Formula):
    antecedent: Formula
    consequent: Formula

    @property
    def children(self):
        return (self.antecedent, self.consequent)


@_node
class Nec(Formula):
    """Nφ: φ holds at every world of the model."""

    operand: Formula

    @property
    def children(self):
        return (self.operand,)


@_node
class Knows(Formula):
    agent: str
    operand: Formula

    @property
    def children(self):
        return (self.operand,)


@_node
class Happy(Formula):
    agent: str
    operand: Formula

    @property
    def children(self):
        return (self.operand,)


@_node
class Sad(Formula):
    agent: str
    operand: Formula

    @property
    def children(self):
        return (self.operand,)


def _coerce_degree(degree) -> Decimal:
    try:
        value = degree if isinstance(degree, Decimal) else Decimal(str(degree))
    except InvalidOperation:
        raise NegativeDegreeError("Degree '{0}' is not a number".format(degree))
    if not value.is_finite():
        raise NegativeDegreeError("Degree '{0}' is not finite".format(degree))
    if value < 0:
        raise NegativeDegreeError(
            "Degree must be nonnegative, got '{0}'".format(degree)
        )
    return value


@_node
class HappyDeg(Formula):
    """H^d_aφ: happiness with a utility gap of at least ``degree``."""

    agent: str
    degree: Decimal
    operand: Formula

    def __post_init__(self):
        object.__setattr__(self, "degree", _coerce_degree(self.degree))
        super().__post_init__()

    @property
    def children(self):
        return (self.operand,)


@_node
class SadDeg(Formula):
    """S^d_aφ: sadness with a utility gap of at least ``degree``."""

    agent: str
    degree: Decimal
    operand: Formula

    def __post_init__(self):
        object.__setattr__(self, "degree", _coerce_degree(self.degree))
        super().__post_init__()

    @property
    def children(self):
        return (self.operand,)


EMOTIONS = (Happy, Sad, HappyDeg, SadDeg)
AGENT_NODES = (Knows,) + EMOTIONS


def conjunction(left: Formula, right: Formula) -> Formula:
    return Not(Implies(left, Not(right)))


def disjunction(left: Formula, right: Formula) -> Formula:
    return Implies(Not(left), right)


def biconditional(left: Formula, right: Formula) -> Formula:
    return conjunction(Implies(left, right), Implies(right, left))


def possibly(operand: Formula) -> Formula:
    """N̄φ, i.e. ¬N¬φ: φ holds at some world of the model."""
    return Not(Nec(Not(operand)))


class Fragment(Enum):
    """
    Sublanguages obtained by removing emotion modalities.
    """

    FULL = "full"
    NO_SAD = "no-sad"
    NO_HAPPY = "no-happy"
    NO_EMOTION = "no-emotion"

    @property
    def excluded(self) -> Tuple[type, ...]:
        return {
            Fragment.FULL: (),
            Fragment.NO_SAD: (Sad, SadDeg),
            Fragment.NO_HAPPY: (Happy, HappyDeg),
            Fragment.NO_EMOTION: EMOTIONS,
        }[self]

    @property
    def allows_happy(self) -> bool:
        return Happy not in self.excluded

    @property
    def allows_sad(self) -> bool:
        return Sad not in self.excluded


def walk(formula: Formula) -> Iterator[Formula]:
    """
    Yields every node of ``formula`` in pre-order, repeats included.
    """
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def subformulas(formula: Formula) -> List[Formula]:
    """
    Returns the distinct subformulas of ``formula`` with every node placed
    after all of its children.
    """
    ordered = []
    seen = set()
    stack = [(formula, False)]
    while stack:
        node, expanded = stack.pop()
        if node in seen:
            continue
        if expanded:
            seen.add(node)
            ordered.append(node)
            continue
        stack.append((node, True))
        stack.extend((child, False) for child in reversed(node.children))
    return ordered


def in_fragment(formula: Formula, fragment: Fragment) -> bool:
    excluded = fragment.excluded
    if not excluded:
        return True
    return not any(isinstance(node, excluded) for node in walk(formula))


def tau(formula: Formula) -> Formula:
    """
    The duality translation: swaps happiness and sadness everywhere and leaves
    every other construct untouched.

    :raises: moodal.exceptions.DegreeUnsupportedError on degree-indexed modalities.
    """
    if isinstance(formula, Var):
        return formula
    if isinstance(formula, Not):
        return Not(tau(formula.operand))
    if isinstance(formula, Implies):
        return Implies(tau(formula.antecedent), tau(formula.consequent))
    if isinstance(formula, Nec):
        return Nec(tau(formula.operand))
    if isinstance(formula, Knows):
        return Knows(formula.agent, tau(formula.operand))
    if isinstance(formula, Happy):
        return Sad(formula.agent, tau(formula.operand))
    if isinstance(formula, Sad):
        return Happy(formula.agent, tau(formula.operand))
    raise DegreeUnsupportedError(
        "The duality translation is undefined on degree-indexed modalities: "
        "{0}".format(formula)
    )


FormulaMetrics = namedtuple(
    "FormulaMetrics", ["depth", "node_count", "agents_used", "vars_used"]
)


def metrics(formula: Formula) -> FormulaMetrics:
    node_count = 0
    agents = set()
    variables = set()
    for node in walk(formula):
        node_count += 1
        if isinstance(node, Var):
            variables.add(node.name)
        elif isinstance(node, AGENT_NODES):
            agents.add(node.agent)
    return FormulaMetrics(
        formula.depth, node_count, frozenset(agents), frozenset(variables)
    )


def _unary_constructors(agents: Sequence[str], fragment: Fragment):
    constructors = [Nec]
    constructors.extend(partial(Knows, agent) for agent in agents)
    if fragment.allows_happy:
        constructors.extend(partial(Happy, agent) for agent in agents)
    if fragment.allows_sad:
        constructors.extend(partial(Sad, agent) for agent in agents)
    return constructors


def enumerate_formulas(
    variables: Iterable[str],
    agents: Iterable[str],
    max_depth: int,
    fragment: Fragment = Fragment.FULL,
) -> Iterator[Formula]:
    """
    Yields every degree-free formula of ``fragment`` over the given signature
    whose depth is at most ``max_depth``, each exactly once.

    Formulas come out by depth, then by constructor (¬, →, N, K, H, S with
    agents in the given order), then by the position of the children in this
    same sequence. Only the levels below ``max_depth`` are held in memory, so
    the deepest level can be consumed lazily.

    :param variables: Propositional variables, in order.
    :param agents: Agents, in order.
    :param max_depth: Depth bound, at least 0.
    :param fragment: The sublanguage to enumerate.
    """
    variables = list(variables)
    agents = list(agents)
    if max_depth < 0:
        return

    levels = [[Var(name) for name in variables]]
    yield from levels[0]
    constructors = _unary_constructors(agents, fragment)

    for depth in range(1, max_depth + 1):
        keep = depth < max_depth
        current = []
        previous = levels[depth - 1]
        # everything strictly shallower than the previous level
        shallower = [formula for level in levels[: depth - 1] for formula in level]
        below = shallower + previous
        boundary = len(shallower)

        def emit(formula):
            if keep:
                current.append(formula)
            return formula

        for operand in previous:
            yield emit(Not(operand))

        for left_index, left in enumerate(below):
            left_is_deep = left_index >= boundary
            pool = below if left_is_deep else previous
            for right in pool:
                yield emit(Implies(left, right))

        for constructor in constructors:
            for operand in previous:
                yield emit(constructor(operand))

        logger.debug("Enumerated formulas of depth %d", depth)
        levels.append(current)


def count_formulas(
    variables: int, agents: int, max_depth: int, fragment: Fragment = Fragment.FULL
) -> int:
    """
    Returns how many formulas ``enumerate_formulas`` yields without building them.
    """
    emotions = int(fragment.allows_happy) + int(fragment.allows_sad)
    unary = 2 + agents * (1 + emotions)
    total = variables
    level = variables
    for _ in range(max_depth):
        previous_total = total
        shallower = previous_total - level
        level = unary * level + previous_total ** 2 - shallower ** 2
        total = previous_total + level
    return total if max_depth >= 0 else 0
