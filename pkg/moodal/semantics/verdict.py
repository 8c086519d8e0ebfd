# -*- coding: utf-8 -*-

"""
moodal.semantics.verdict

The result of evaluating one formula at one world, with an optional trace of
the clauses that decided it.
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from moodal.formula import Formula

BOOLEAN = "boolean"
NECESSITY = "necessity"
KNOWLEDGE = "knowledge"
CONDITION_A = "a"
CONDITION_B = "b"
CONDITION_C = "c"
TAGS = (BOOLEAN, NECESSITY, KNOWLEDGE, CONDITION_A, CONDITION_B, CONDITION_C)


@dataclass(frozen=True)
class TraceEntry(object):
    """
    One step of an explanation.

    :param formula: The subformula that was decided.
    :param world: The world it was decided at.
    :param tag: Which clause decided it, one of ``TAGS``.
    :param outcome: Whether the subformula holds at the world.
    :param witness: Worlds that decided the clause, e.g. the world of an
        agent's block that refutes the operand, or a refuting and satisfying
        world left unordered by the preference.
    """

    formula: Formula
    world: str
    tag: str
    outcome: bool
    witness: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        entry = {
            "formula": str(self.formula),
            "world": self.world,
            "condition": self.tag,
            "outcome": self.outcome,
        }
        if self.witness:
            entry["witness"] = list(self.witness)
        return entry

    def __str__(self):
        text = "{0} at {1}: {2} [{3}]".format(
            self.formula, self.world, "holds" if self.outcome else "fails", self.tag
        )
        if self.witness:
            text += " witness {0}".format(", ".join(self.witness))
        return text


@dataclass(frozen=True)
class Verdict(object):
    holds: bool
    formula: Formula
    world: str
    trace: Optional[Tuple[TraceEntry, ...]] = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "formula": str(self.formula),
            "world": self.world,
            "holds": self.holds,
        }
        if self.trace is not None:
            result["trace"] = [entry.to_dict() for entry in self.trace]
        return result

    def __str__(self):
        lines = ["holds" if self.holds else "fails"]
        if self.trace:
            lines.extend("  " + str(entry) for entry in self.trace)
        return "\n".join(lines)
