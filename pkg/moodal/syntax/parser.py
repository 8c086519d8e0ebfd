# -*- coding: utf-8 -*-

"""
moodal.syntax.parser

Parses the ASCII formula syntax into the formula AST. Unary operators bind
tightest, then &, |, -> (right associative) and <-> (left associative).
"""
import logging
import re
from decimal import Decimal

from lark import Lark, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)

from moodal.exceptions import FormulaTooDeepError, NegativeDegreeError, ParseError
from moodal.formula import (
    Happy,
    HappyDeg,
    Implies,
    Knows,
    Nec,
    Not,
    Sad,
    SadDeg,
    Var,
    biconditional,
    conjunction,
    disjunction,
    possibly,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: iff

?iff: imp
    | iff "<->" imp -> biconditional

?imp: disj
    | disj "->" imp -> implication

?disj: conj
    | disj "|" conj -> disjunction

?conj: unary
     | conj "&" unary -> conjunction

?unary: "!" unary -> negation
      | "N" unary -> necessity
      | "Nbar" unary -> possibility
      | _KNOWS NAME "]" unary -> knows
      | _HAPPY NAME [";" DEGREE] "]" unary -> happy
      | _SAD NAME [";" DEGREE] "]" unary -> sad
      | atom

?atom: NAME -> variable
     | "(" iff ")"

_KNOWS.2: /K\[/
_HAPPY.2: /H\[/
_SAD.2: /S\[/
NAME: /[A-Za-z_][A-Za-z0-9_]*/
DEGREE: /-?[0-9]+(\.[0-9]+)?/

%import common.WS
%ignore WS
"""

_lark = Lark(GRAMMAR, parser="lalr", maybe_placeholders=True)

_NAME_PATTERN = re.compile(_lark.get_terminal("NAME").pattern.value)

# keywords lex as NAME and never show up in a lexer error's allowed set
_KEYWORDS = frozenset(
    terminal.name
    for terminal in _lark.terminals
    if terminal.pattern.type == "str" and _NAME_PATTERN.fullmatch(terminal.pattern.value)
)

_READABLE = {
    "$END": "end of input",
    "NAME": "identifier",
    "DEGREE": "degree",
    "_KNOWS": "'K['",
    "_HAPPY": "'H['",
    "_SAD": "'S['",
}


def _readable(terminal_name):
    if terminal_name in _READABLE:
        return _READABLE[terminal_name]
    try:
        pattern = _lark.get_terminal(terminal_name).pattern
    except KeyError:
        return terminal_name
    return "'{0}'".format(pattern.value)


@v_args(inline=True)
class FormulaBuilder(Transformer):
    """
    Turns the lark parse tree into Formula nodes, expanding derived
    connectives on the way.
    """

    def variable(self, name):
        return Var(str(name))

    def negation(self, operand):
        return Not(operand)

    def necessity(self, operand):
        return Nec(operand)

    def possibility(self, operand):
        return possibly(operand)

    def knows(self, agent, operand):
        return Knows(str(agent), operand)

    def _emotion(self, bare, graded, agent, degree, operand):
        if degree is None:
            return bare(str(agent), operand)
        value = Decimal(str(degree))
        if value < 0:
            raise NegativeDegreeError(
                "Degree must be nonnegative",
                line=degree.line,
                column=degree.column,
                found=str(degree),
            )
        return graded(str(agent), value, operand)

    def happy(self, agent, degree, operand):
        return self._emotion(Happy, HappyDeg, agent, degree, operand)

    def sad(self, agent, degree, operand):
        return self._emotion(Sad, SadDeg, agent, degree, operand)

    def implication(self, antecedent, consequent):
        return Implies(antecedent, consequent)

    def conjunction(self, left, right):
        return conjunction(left, right)

    def disjunction(self, left, right):
        return disjunction(left, right)

    def biconditional(self, left, right):
        return biconditional(left, right)


def _parse_error(error: UnexpectedInput, text: str) -> ParseError:
    at_end = False
    if isinstance(error, UnexpectedCharacters):
        found = error.char
        expected = set(error.allowed or ())
        if "BANG" in expected:
            expected |= _KEYWORDS
        message = "Unexpected character '{0}'".format(found)
    elif isinstance(error, UnexpectedToken):
        at_end = error.token.type == "$END"
        found = "" if at_end else str(error.token)
        expected = error.expected or ()
        message = (
            "Unexpected token '{0}'".format(found) if found else "Unexpected end of input"
        )
    else:
        at_end = True
        found = ""
        expected = getattr(error, "expected", ()) or ()
        message = "Unexpected end of input"

    line, column = error.line, error.column
    # errors at the end of input point just past the last character
    if at_end or not isinstance(line, int) or line < 1:
        lines = text.split("\n")
        line, column = len(lines), len(lines[-1]) + 1
    return ParseError(
        message,
        line=line,
        column=column,
        expected={_readable(name) for name in expected},
        found=found,
    )


def parse_formula(text: str):
    """
    Parses ``text`` into a Formula.

    :param text: Formula source, e.g. ``"K[a] p -> H[a;1] q"``.
    :returns: The Formula.
    :raises: moodal.exceptions.ParseError with the position of the problem.
    :raises: moodal.exceptions.NegativeDegreeError on a negative degree.
    :raises: moodal.exceptions.FormulaTooDeepError when the nesting exhausts
        the interpreter stack.
    """
    try:
        tree = _lark.parse(text)
    except UnexpectedInput as error:
        raise _parse_error(error, text) from None
    try:
        return FormulaBuilder().transform(tree)
    except RecursionError:
        raise _too_deep(text) from None
    except VisitError as error:
        if isinstance(error.orig_exc, ParseError):
            raise error.orig_exc from None
        if isinstance(error.orig_exc, RecursionError):
            raise _too_deep(text) from None
        raise


def _too_deep(text: str) -> FormulaTooDeepError:
    return FormulaTooDeepError(
        "Formula nests too deeply to parse ({0} characters)".format(len(text))
    )
