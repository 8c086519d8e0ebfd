# -*- coding: utf-8 -*-

"""
moodal.search.report

Outcomes of the bounded searches. Reports that involve models embed them
in the model document format so they can be written out and loaded again.
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional

from moodal.formula import Formula, Fragment
from moodal.model.models import EpistemicModel
from moodal.syntax.loader import dump_model, model_to_dict


def _indented(model) -> str:
    return "\n".join("  " + line for line in dump_model(model).splitlines())


class SearchReport(object):
    """
    Base class of all search outcomes. ``success`` tells whether the search
    found what it was asked for.
    """

    outcome = None
    success = False

    def to_dict(self) -> Dict[str, Any]:
        raise NotImplementedError  # pragma: no cover


@dataclass(frozen=True)
class WitnessFound(SearchReport):
    model: EpistemicModel
    world: str
    formula: Formula
    mode: str
    models_examined: int

    outcome = "WitnessFound"
    success = True

    def to_dict(self):
        return {
            "outcome": self.outcome,
            "mode": self.mode,
            "formula": str(self.formula),
            "world": self.world,
            "models_examined": self.models_examined,
            "model": model_to_dict(self.model),
        }

    def __str__(self):
        return "WitnessFound: {0} {1} at {2} after {3} models\n{4}".format(
            "satisfies" if self.mode == "satisfy" else "refutes",
            self.formula,
            self.world,
            self.models_examined,
            _indented(self.model),
        )


@dataclass(frozen=True)
class Exhausted(SearchReport):
    models_examined: int
    max_worlds: int
    description: str = ""

    outcome = "Exhausted"

    def to_dict(self):
        return {
            "outcome": self.outcome,
            "models_examined": self.models_examined,
            "max_worlds": self.max_worlds,
            "description": self.description,
        }

    def __str__(self):
        text = "Exhausted: {0} models up to {1} worlds".format(
            self.models_examined, self.max_worlds
        )
        return "{0}, {1}".format(text, self.description) if self.description else text


@dataclass(frozen=True)
class Equivalent(SearchReport):
    """
    The models agree on every formula of ``fragment`` up to ``depth``. This is
    a bounded statement: deeper formulas were not checked.
    """

    formulas_checked: int
    depth: int
    fragment: Fragment

    outcome = "Equivalent"
    success = True

    def to_dict(self):
        return {
            "outcome": self.outcome,
            "formulas_checked": self.formulas_checked,
            "depth": self.depth,
            "fragment": self.fragment.value,
        }

    def __str__(self):
        return "Equivalent: {0} {1} formulas up to depth {2} agree at every world".format(
            self.formulas_checked, self.fragment.value, self.depth
        )


@dataclass(frozen=True)
class Distinguished(SearchReport):
    formula: Formula
    world: str
    left_holds: bool
    right_holds: bool
    formulas_checked: int
    depth: int

    outcome = "Distinguished"

    def to_dict(self):
        return {
            "outcome": self.outcome,
            "formula": str(self.formula),
            "world": self.world,
            "left": self.left_holds,
            "right": self.right_holds,
            "formulas_checked": self.formulas_checked,
            "depth": self.depth,
        }

    def __str__(self):
        return "Distinguished: {0} at {1} ({2} on the left, {3} on the right)".format(
            self.formula,
            self.world,
            "holds" if self.left_holds else "fails",
            "holds" if self.right_holds else "fails",
        )


@dataclass(frozen=True)
class SeparatingPair(SearchReport):
    """
    Two models that no formula of ``fragment`` up to ``depth`` tells apart,
    while ``formula`` holds at ``world`` in exactly one of them.
    """

    left: EpistemicModel
    right: EpistemicModel
    formula: Formula
    world: str
    fragment: Fragment
    depth: int
    formulas_checked: int
    pairs_examined: Optional[int] = None

    outcome = "SeparatingPair"
    success = True

    def to_dict(self):
        return {
            "outcome": self.outcome,
            "formula": str(self.formula),
            "world": self.world,
            "fragment": self.fragment.value,
            "depth": self.depth,
            "formulas_checked": self.formulas_checked,
            "pairs_examined": self.pairs_examined,
            "left": model_to_dict(self.left),
            "right": model_to_dict(self.right),
        }

    def __str__(self):
        return (
            "SeparatingPair: {0} tells the models apart at {1}; they agree on "
            "{2} {3} formulas up to depth {4}\nleft:\n{5}\nright:\n{6}".format(
                self.formula,
                self.world,
                self.formulas_checked,
                self.fragment.value,
                self.depth,
                _indented(self.left),
                _indented(self.right),
            )
        )
