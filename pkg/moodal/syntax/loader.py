# -*- coding: utf-8 -*-

"""
moodal.syntax.loader

Reads and writes the YAML model document. Loading runs in stages: YAML
parsing, a structural check against ``MODEL_SCHEMA``, a pre-check of
everything except the order axioms, preference closure and finally full
validation.
"""
import logging
from decimal import Decimal, InvalidOperation
from os import path
from typing import Any, Dict

import jsonschema
import yaml

from moodal.exceptions import (
    CycleError,
    ModelSchemaError,
    ParseError,
    UnknownModelError,
    ValidationError,
)
from moodal.logging import ModelLoggerAdapter
from moodal.model.graph import close_preferences, hasse_edges
from moodal.model.models import (
    GOODNESS,
    KINDS,
    PREFERENCE,
    UTILITY,
    EpistemicModel,
    GoodnessModel,
    UtilityModel,
    normalise_partition,
)
from moodal.model.validation import ValidationReport, Violation, validate

logger = logging.getLogger(__name__)

_WORLD_LIST = {"type": "array", "items": {"type": "string", "minLength": 1}}

MODEL_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "required": ["kind", "agents", "vars", "worlds", "indist", "valuation"],
    "properties": {
        "kind": {"enum": list(KINDS)},
        "agents": _WORLD_LIST,
        "vars": _WORLD_LIST,
        "worlds": _WORLD_LIST,
        "indist": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": _WORLD_LIST},
        },
        "pref": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {"type": "string", "minLength": 1},
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        "utility": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "additionalProperties": {"type": "number"},
            },
        },
        "good": {"type": "object", "additionalProperties": _WORLD_LIST},
        "valuation": {"type": "object", "additionalProperties": _WORLD_LIST},
    },
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": kind}}},
            "then": {
                "required": [payload],
                "not": {
                    "anyOf": [
                        {"required": [other]}
                        for other in ("pref", "utility", "good")
                        if other != payload
                    ]
                },
            },
        }
        for kind, payload in (
            (PREFERENCE, "pref"),
            (UTILITY, "utility"),
            (GOODNESS, "good"),
        )
    ],
}

# Rules that only make sense once preferences are closed.
_ORDER_RULES = ("transitivity", "irreflexivity")


class ModelYamlLoader(yaml.SafeLoader):
    """
    A SafeLoader that reads every number as an exact Decimal.
    """

    pass


def _decimal_constructor(loader, node):
    value = loader.construct_scalar(node)
    try:
        return Decimal(value.replace("_", ""))
    except InvalidOperation:
        if node.tag.endswith("float"):
            return Decimal(str(yaml.SafeLoader.construct_yaml_float(loader, node)))
        return Decimal(yaml.SafeLoader.construct_yaml_int(loader, node))


ModelYamlLoader.add_constructor("tag:yaml.org,2002:float", _decimal_constructor)
ModelYamlLoader.add_constructor("tag:yaml.org,2002:int", _decimal_constructor)


class ModelYamlDumper(yaml.SafeDumper):
    """
    A SafeDumper that writes Decimals as plain YAML numbers.
    """

    pass


def _represent_decimal(dumper, value: Decimal):
    if value == value.to_integral_value():
        return dumper.represent_scalar("tag:yaml.org,2002:int", str(int(value)))
    return dumper.represent_scalar("tag:yaml.org,2002:float", format(value, "f"))


ModelYamlDumper.add_representer(Decimal, _represent_decimal)


def _check_schema(document: Any):
    if not isinstance(document, dict):
        raise ModelSchemaError("A model document must be a mapping")
    try:
        jsonschema.validate(document, MODEL_SCHEMA)
    except jsonschema.ValidationError as error:
        location = "/".join(str(part) for part in error.absolute_path) or "<root>"
        raise ModelSchemaError(
            "Model document does not match the schema at {0}: {1}".format(
                location, error.message
            )
        )


def _build(document: Dict[str, Any], name: str, pref=None):
    worlds = tuple(document["worlds"])
    variables = tuple(document["vars"])
    valuation = {variable: frozenset() for variable in variables}
    valuation.update(
        {key: frozenset(value) for key, value in document["valuation"].items()}
    )
    common = dict(
        name=name,
        agents=tuple(document["agents"]),
        variables=variables,
        worlds=worlds,
        indist={
            agent: normalise_partition(worlds, blocks)
            for agent, blocks in document["indist"].items()
        },
        valuation=valuation,
    )
    kind = document["kind"]
    if kind == PREFERENCE:
        if pref is None:
            pref = {
                agent: frozenset(tuple(edge) for edge in edges)
                for agent, edges in document["pref"].items()
            }
        return EpistemicModel(pref=pref, **common)
    if kind == UTILITY:
        return UtilityModel(
            utility={
                agent: {world: Decimal(value) for world, value in values.items()}
                for agent, values in document["utility"].items()
            },
            **common
        )
    return GoodnessModel(
        good={agent: frozenset(good) for agent, good in document["good"].items()},
        **common
    )


def model_from_dict(document: Dict[str, Any], name: str = "model"):
    """
    Builds a closed and validated model from a parsed document.

    :raises: moodal.exceptions.ModelSchemaError for structural problems.
    :raises: moodal.exceptions.ValidationError for violated invariants.
    :raises: moodal.exceptions.CycleError for cyclic preferences.
    """
    _check_schema(document)
    model_logger = ModelLoggerAdapter(logger, name, document.get("kind"))

    model = _build(document, name)
    if isinstance(model, EpistemicModel):
        report = validate(model)
        early = tuple(v for v in report.violations if v.rule not in _ORDER_RULES)
        if early:
            raise ValidationError(ValidationReport(name, early))
        closed = close_preferences(model.pref, model.worlds)
        model = _build(document, name, pref=closed)

    report = validate(model)
    if not report.ok:
        raise ValidationError(report)
    model_logger.debug("Loaded %s", model)
    return model


def load_model(text: str, name: str = "model"):
    """
    Parses, closes and validates a YAML model document.

    :param text: The document.
    :param name: The name the model is given in logs and reports.
    :raises: moodal.exceptions.ParseError for malformed YAML.
    """
    try:
        document = yaml.load(text, Loader=ModelYamlLoader)
    except yaml.YAMLError as error:
        mark = getattr(error, "problem_mark", None)
        raise ParseError(
            "Malformed model document: {0}".format(
                getattr(error, "problem", None) or error
            ),
            line=mark.line + 1 if mark else None,
            column=mark.column + 1 if mark else None,
        )
    return model_from_dict(document, name)


def load_model_file(file_path: str):
    """
    Loads the model document at ``file_path``; the model is named after the file.
    """
    try:
        with open(file_path, "r") as model_file:
            text = model_file.read()
    except OSError as error:
        raise UnknownModelError(
            "Cannot read model file '{0}': {1}".format(file_path, error.strerror)
        )
    name = path.splitext(path.basename(file_path))[0]
    return load_model(text, name)


def resolve_model(reference: str):
    """
    Resolves a built-in fixture name first, then a file path.

    :raises: moodal.exceptions.UnknownModelError if neither matches.
    """
    from moodal.fixtures import FIXTURES, load_fixture

    if reference in FIXTURES:
        return load_fixture(reference)
    if path.isfile(reference):
        return load_model_file(reference)
    raise UnknownModelError(
        "'{0}' is neither a built-in fixture ({1}) nor a model file".format(
            reference, ", ".join(FIXTURES)
        )
    )


def check_model(reference: str) -> ValidationReport:
    """
    Resolves ``reference`` like ``resolve_model`` but returns the validation
    report instead of raising on violated invariants. Cyclic preferences are
    reported as an irreflexivity violation.

    :raises: moodal.exceptions.ParseError, ModelSchemaError, UnknownModelError
    """
    from moodal.fixtures import FIXTURES, load_fixture

    if reference in FIXTURES:
        return validate(load_fixture(reference))
    name = path.splitext(path.basename(reference))[0]
    try:
        load_model_file(reference)
    except ValidationError as error:
        return error.report
    except CycleError as error:
        return ValidationReport(
            name, (Violation("irreflexivity", str(error), (error.world,)),)
        )
    return ValidationReport(name)


def model_to_dict(model) -> Dict[str, Any]:
    """
    Returns the document form of ``model``; preferences are written as their
    covering edges.
    """
    document = {
        "kind": model.kind,
        "agents": list(model.agents),
        "vars": list(model.variables),
        "worlds": list(model.worlds),
        "indist": {
            agent: [
                [world for world in model.worlds if world in block]
                for block in model.indist.get(agent, ())
            ]
            for agent in model.agents
        },
    }
    if isinstance(model, EpistemicModel):
        document["pref"] = {
            agent: [list(edge) for edge in hasse_edges(pairs, model.worlds)]
            for agent, pairs in model.pref.items()
        }
    elif isinstance(model, UtilityModel):
        document["utility"] = {
            agent: {
                world: values[world] for world in model.worlds if world in values
            }
            for agent, values in model.utility.items()
        }
    else:
        document["good"] = {
            agent: [world for world in model.worlds if world in good]
            for agent, good in model.good.items()
        }
    document["valuation"] = {
        variable: [
            world for world in model.worlds if world in model.valuation.get(variable, ())
        ]
        for variable in model.variables
    }
    return document


def dump_model(model) -> str:
    """
    Serialises ``model`` as a YAML document that ``load_model`` reads back
    into an equal model.
    """
    return yaml.dump(
        model_to_dict(model),
        Dumper=ModelYamlDumper,
        sort_keys=False,
        default_flow_style=None,
        allow_unicode=True,
    )
