# -*- coding: utf-8 -*-

"""
moodal.axioms.schemas

The axiom schemas of the logic and the derived facts checked alongside
them. A schema fills one or two formula slots, and an agent slot where the
schema speaks about an agent. Schemas written with a generic emotion E come
in a happiness and a sadness variant.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple

from moodal.exceptions import ArityMismatchError, MoodalException
from moodal.formula import (
    Formula,
    Happy,
    Implies,
    Knows,
    Nec,
    Not,
    Sad,
    biconditional,
    conjunction,
    disjunction,
    possibly,
)

HAPPY = "H"
SAD = "S"
EMOTION_CONSTRUCTORS = {HAPPY: Happy, SAD: Sad}


class AxiomFamily(Enum):
    TRUTH_N = "truth-n"
    TRUTH_K = "truth-k"
    TRUTH_E = "truth-e"
    DISTRIBUTIVITY_N = "distributivity-n"
    DISTRIBUTIVITY_K = "distributivity-k"
    NEG_INTRO_N = "neg-intro-n"
    NEG_INTRO_K = "neg-intro-k"
    KNOWLEDGE_OF_NECESSITY = "knowledge-of-necessity"
    EMOTIONAL_INTROSPECTION = "emotional-introspection"
    EMOTIONAL_CONSISTENCY = "emotional-consistency"
    COHERENCE_SAME = "coherence-same"
    COHERENCE_OPPOSITE = "coherence-opposite"
    COUNTERFACTUAL = "counterfactual"
    PREDICTABILITY_H = "predictability-h"
    PREDICTABILITY_S = "predictability-s"
    SUBSTITUTION = "substitution"
    # derived facts
    EMOTION_KNOWLEDGE = "emotion-knowledge"
    POSITIVE_INTROSPECTION_N = "positive-introspection-n"
    POSITIVE_INTROSPECTION_K = "positive-introspection-k"

    @property
    def derived(self) -> bool:
        return self in _DERIVED

    @property
    def arity(self) -> int:
        return 2 if self in _TWO_SLOT else 1

    @property
    def uses_agent(self) -> bool:
        return self not in _AGENT_FREE

    @property
    def generic_emotion(self) -> bool:
        """Whether the family is stated for a generic emotion E."""
        return self in _GENERIC


_DERIVED = frozenset(
    [
        AxiomFamily.EMOTION_KNOWLEDGE,
        AxiomFamily.POSITIVE_INTROSPECTION_N,
        AxiomFamily.POSITIVE_INTROSPECTION_K,
    ]
)
_TWO_SLOT = frozenset(
    [
        AxiomFamily.DISTRIBUTIVITY_N,
        AxiomFamily.DISTRIBUTIVITY_K,
        AxiomFamily.COHERENCE_SAME,
        AxiomFamily.COHERENCE_OPPOSITE,
        AxiomFamily.SUBSTITUTION,
    ]
)
_AGENT_FREE = frozenset(
    [
        AxiomFamily.TRUTH_N,
        AxiomFamily.DISTRIBUTIVITY_N,
        AxiomFamily.NEG_INTRO_N,
        AxiomFamily.POSITIVE_INTROSPECTION_N,
    ]
)
_GENERIC = frozenset(
    [
        AxiomFamily.TRUTH_E,
        AxiomFamily.EMOTIONAL_INTROSPECTION,
        AxiomFamily.COHERENCE_SAME,
        AxiomFamily.COUNTERFACTUAL,
        AxiomFamily.SUBSTITUTION,
        AxiomFamily.EMOTION_KNOWLEDGE,
    ]
)


@dataclass(frozen=True)
class AxiomSchema(object):
    """
    One schema variant: a family, plus the emotion that fills E for the
    families stated with a generic emotion.
    """

    family: AxiomFamily
    emotion: Optional[str] = None

    def __post_init__(self):
        if self.family.generic_emotion and self.emotion not in EMOTION_CONSTRUCTORS:
            raise MoodalException(
                "Schema {0} needs an emotion, H or S".format(self.family.value)
            )
        if not self.family.generic_emotion and self.emotion is not None:
            raise MoodalException(
                "Schema {0} takes no emotion".format(self.family.value)
            )

    @property
    def name(self) -> str:
        if self.emotion:
            return "{0}[{1}]".format(self.family.value, self.emotion)
        return self.family.value

    @property
    def arity(self) -> int:
        return self.family.arity

    @property
    def uses_agent(self) -> bool:
        return self.family.uses_agent

    def instantiate(
        self, agent: Optional[str], phi: Formula, psi: Optional[Formula] = None
    ) -> Formula:
        return instantiate(self, agent, phi, psi)

    def __str__(self):
        return self.name


def _variants(families: Iterable[AxiomFamily]) -> Tuple[AxiomSchema, ...]:
    schemas = []
    for family in families:
        if family.generic_emotion:
            schemas.extend(AxiomSchema(family, emotion) for emotion in (HAPPY, SAD))
        else:
            schemas.append(AxiomSchema(family))
    return tuple(schemas)


ALL_SCHEMAS = _variants(family for family in AxiomFamily if not family.derived)
DERIVED_SCHEMAS = _variants(family for family in AxiomFamily if family.derived)


def select_schemas(names: Iterable[str], schemas=ALL_SCHEMAS + DERIVED_SCHEMAS):
    """
    Returns the schemas matching any of ``names``. A name matches a variant
    ("coherence-same[H]"), a family ("coherence-same") or a group of
    families sharing a prefix ("coherence").

    :raises: moodal.exceptions.MoodalException if a name matches nothing.
    """
    selected = []
    for name in names:
        matches = [
            schema
            for schema in schemas
            if name in (schema.name, schema.family.value)
            or schema.family.value.startswith(name + "-")
        ]
        if not matches:
            raise MoodalException(
                "Unknown axiom schema '{0}', expected one of {1}".format(
                    name, ", ".join(sorted({s.family.value for s in schemas}))
                )
            )
        selected.extend(schema for schema in matches if schema not in selected)
    return tuple(schema for schema in schemas if schema in selected)


def instantiate(
    schema: AxiomSchema,
    agent: Optional[str],
    phi: Formula,
    psi: Optional[Formula] = None,
) -> Formula:
    """
    Fills the slots of ``schema``. Derived connectives expand to primitives.

    :param agent: The agent, or None for agent-free schemas.
    :param phi: The first formula slot.
    :param psi: The second formula slot, for two-slot schemas only.
    :raises: moodal.exceptions.ArityMismatchError
    """
    supplied = 1 if psi is None else 2
    if supplied != schema.arity:
        raise ArityMismatchError(
            "Schema {0} takes {1} formula(s), got {2}".format(
                schema.name, schema.arity, supplied
            )
        )
    if schema.uses_agent and agent is None:
        raise ArityMismatchError("Schema {0} needs an agent".format(schema.name))

    family = schema.family
    emotion = EMOTION_CONSTRUCTORS.get(schema.emotion)

    def E(formula):
        return emotion(agent, formula)

    def H(formula):
        return Happy(agent, formula)

    def S(formula):
        return Sad(agent, formula)

    def K(formula):
        return Knows(agent, formula)

    if family is AxiomFamily.TRUTH_N:
        return Implies(Nec(phi), phi)
    if family is AxiomFamily.TRUTH_K:
        return Implies(K(phi), phi)
    if family is AxiomFamily.TRUTH_E:
        return Implies(E(phi), phi)
    if family is AxiomFamily.DISTRIBUTIVITY_N:
        return Implies(Nec(Implies(phi, psi)), Implies(Nec(phi), Nec(psi)))
    if family is AxiomFamily.DISTRIBUTIVITY_K:
        return Implies(K(Implies(phi, psi)), Implies(K(phi), K(psi)))
    if family is AxiomFamily.NEG_INTRO_N:
        return Implies(Not(Nec(phi)), Nec(Not(Nec(phi))))
    if family is AxiomFamily.NEG_INTRO_K:
        return Implies(Not(K(phi)), K(Not(K(phi))))
    if family is AxiomFamily.KNOWLEDGE_OF_NECESSITY:
        return Implies(Nec(phi), K(phi))
    if family is AxiomFamily.EMOTIONAL_INTROSPECTION:
        return Implies(E(phi), K(E(phi)))
    if family is AxiomFamily.EMOTIONAL_CONSISTENCY:
        return Implies(H(phi), Not(S(phi)))
    if family is AxiomFamily.COHERENCE_SAME:
        return Implies(
            conjunction(possibly(E(phi)), possibly(E(psi))),
            disjunction(Nec(Implies(phi, psi)), Nec(Implies(psi, phi))),
        )
    if family is AxiomFamily.COHERENCE_OPPOSITE:
        return Implies(
            conjunction(possibly(H(phi)), possibly(S(psi))),
            disjunction(Nec(Implies(phi, Not(psi))), Nec(Implies(Not(psi), phi))),
        )
    if family is AxiomFamily.COUNTERFACTUAL:
        return Implies(E(phi), Not(Nec(phi)))
    if family is AxiomFamily.PREDICTABILITY_H:
        return Implies(
            disjunction(possibly(H(phi)), possibly(S(Not(phi)))),
            Implies(K(phi), H(phi)),
        )
    if family is AxiomFamily.PREDICTABILITY_S:
        return Implies(
            disjunction(possibly(H(Not(phi))), possibly(S(phi))),
            Implies(K(phi), S(phi)),
        )
    if family is AxiomFamily.SUBSTITUTION:
        return Implies(Nec(biconditional(phi, psi)), Implies(E(phi), E(psi)))
    if family is AxiomFamily.EMOTION_KNOWLEDGE:
        return Implies(E(phi), K(phi))
    if family is AxiomFamily.POSITIVE_INTROSPECTION_N:
        return Implies(Nec(phi), Nec(Nec(phi)))
    return Implies(K(phi), K(K(phi)))
