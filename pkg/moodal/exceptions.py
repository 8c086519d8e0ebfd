# -*- coding: utf-8 -*-


class MoodalException(Exception):
    """
    Base class for all Moodal errors
    """

    pass


class ParseError(MoodalException):
    """
    Error raised when formula text (or a model document) cannot be parsed.

    :param message: Human readable description.
    :param line: 1-based line of the offending token, if known.
    :param column: 1-based column of the offending token, if known.
    :param expected: Names of the tokens that would have been accepted.
    :param found: The offending token text.
    """

    def __init__(self, message, line=None, column=None, expected=(), found=None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        self.found = found

    @property
    def position(self):
        return self.line, self.column

    def __str__(self):
        message = self.args[0]
        if self.line is not None:
            message = "line {0}, column {1}: {2}".format(
                self.line, self.column, message
            )
        if self.expected:
            message += " (expected one of: {0})".format(", ".join(self.expected))
        return message


class NegativeDegreeError(ParseError):
    """
    Error raised when a degree-indexed modality is given a negative degree.
    """

    pass


class DegreeUnsupportedError(MoodalException):
    """
    Error raised when the duality translation meets a degree-indexed modality.
    """

    pass


class ModelSchemaError(MoodalException):
    """
    Error raised when a model document does not match the model file schema.
    """

    pass


class ValidationError(MoodalException):
    """
    Error raised when a loaded model violates the invariants of its kind. The
    full report is available as ``report``.
    """

    def __init__(self, report):
        self.report = report
        rules = ", ".join(sorted({violation.rule for violation in report.violations}))
        super().__init__("Model is invalid: {0}".format(rules))


class CycleError(MoodalException):
    """
    Error raised when preference edges close to a relation with w ≺ w.
    """

    def __init__(self, agent, world):
        self.agent = agent
        self.world = world
        super().__init__(
            "Preferences of agent '{0}' are cyclic: world '{1}' "
            "would be preferred to itself".format(agent, world)
        )


class UnknownWorldError(MoodalException):
    """
    Error raised when a world identifier is not declared by the model.
    """

    pass


class UnknownAgentError(MoodalException):
    """
    Error raised when an agent identifier is not declared by the model.
    """

    pass


class UnknownVariableError(MoodalException):
    """
    Error raised when a propositional variable is not declared by the model.
    """

    pass


class DegreeInPreferenceSemanticsError(MoodalException):
    """
    Error raised when a degree-indexed modality is evaluated on a preference model.
    """

    pass


class MissingDegreeError(MoodalException):
    """
    Error raised when a bare happiness or sadness modality is evaluated on a
    utility model.
    """

    pass


class DegreeInGoodnessSemanticsError(MoodalException):
    """
    Error raised when a degree-indexed modality is evaluated on a goodness model.
    """

    pass


class ArityMismatchError(MoodalException):
    """
    Error raised when an axiom schema is instantiated with the wrong number of
    formulas.
    """

    pass


class CapExceededError(MoodalException):
    """
    Error raised when an enumeration would exceed the configured cap.
    """

    def __init__(self, what, count, cap):
        self.what = what
        self.count = count
        self.cap = cap
        super().__init__(
            "Refusing to enumerate {0}: count {1} exceeds cap {2}".format(
                what, count, cap
            )
        )


class SignatureMismatchError(MoodalException):
    """
    Error raised when two models compared world by world do not share worlds,
    agents and variables.
    """

    pass


class TargetNotExcludedError(MoodalException):
    """
    Error raised when a separation target is expressible in the fragment it
    should be separated from.
    """

    pass


class UnknownModelError(MoodalException):
    """
    Error raised when a model reference is neither a fixture nor a readable file.
    """

    pass


class SemanticsMismatchError(MoodalException):
    """
    Error raised when the requested semantics cannot be applied to a model kind.
    """

    pass


class SearchIntegrityError(MoodalException):
    """
    Error raised when a search result or counterexample fails its own re-check.
    """

    pass


class SearchBoundsError(MoodalException):
    """
    Error raised when search bounds are malformed.
    """

    pass


class FormulaTooDeepError(MoodalException):
    """
    Error raised when a formula nests deeper than the interpreter stack allows.
    """

    pass
