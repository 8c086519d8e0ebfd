# -*- coding: utf-8 -*-

"""
moodal.syntax.printer

Renders formulas in the ASCII syntax with the fewest parentheses that
``parse_formula`` needs to rebuild the same tree.
"""
from moodal.formula import (
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
)


def _prefix(formula: Formula) -> str:
    if isinstance(formula, Not):
        return "!"
    if isinstance(formula, Nec):
        return "N "
    if isinstance(formula, Knows):
        return "K[{0}] ".format(formula.agent)
    if isinstance(formula, Happy):
        return "H[{0}] ".format(formula.agent)
    if isinstance(formula, Sad):
        return "S[{0}] ".format(formula.agent)
    if isinstance(formula, HappyDeg):
        return "H[{0};{1}] ".format(formula.agent, format(formula.degree, "f"))
    if isinstance(formula, SadDeg):
        return "S[{0};{1}] ".format(formula.agent, format(formula.degree, "f"))
    raise TypeError("Not a unary formula: {0!r}".format(formula))


def _operand(formula: Formula) -> str:
    text = print_formula(formula)
    return "({0})".format(text) if isinstance(formula, Implies) else text


def print_formula(formula: Formula) -> str:
    """
    Returns the text of ``formula``, e.g. ``"K[a] p -> !H[a] p"``.
    """
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Implies):
        return "{0} -> {1}".format(
            _operand(formula.antecedent), print_formula(formula.consequent)
        )
    return _prefix(formula) + _operand(formula.children[0])
