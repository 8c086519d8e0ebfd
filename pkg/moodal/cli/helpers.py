import json
import logging
import sys
from decimal import Decimal
from enum import IntEnum
from functools import wraps
from typing import Any

import click
import yaml

from moodal.exceptions import CapExceededError, FormulaTooDeepError, MoodalException
from moodal.helpers import logging_level
from moodal.syntax.loader import ModelYamlDumper
from moodal.verdict_colourer import VerdictColourer

logger = logging.getLogger(__name__)


class ExitStatus(IntEnum):
    """
    Exit codes shared by every command, so that shell pipelines can branch
    on the outcome without parsing output.
    """

    HOLDS = 0
    FAILS = 1
    INPUT_ERROR = 2
    CAP_EXCEEDED = 3


def status_for(success: bool) -> ExitStatus:
    return ExitStatus.HOLDS if success else ExitStatus.FAILS


def catch_exceptions(func):
    """
    Catches and simplifies expected errors thrown by moodal.

    catch_exceptions should be used as a decorator.

    :param func: The function which may throw exceptions which should be
        simplified.
    :returns: The decorated function.
    """

    @wraps(func)
    def decorated(*args, **kwargs):
        """
        Invokes ``func``, catches expected errors, prints the error message to
        stderr and exits with the matching ExitStatus. In debug mode, the
        original exception is re-raised to assist debugging.
        """
        try:
            return func(*args, **kwargs)
        except RecursionError:
            if logging_level() == logging.DEBUG:
                raise
            error = FormulaTooDeepError("Formula nests too deeply to process")
            click.echo("Error: {0}".format(error), err=True)
            sys.exit(ExitStatus.INPUT_ERROR)
        except MoodalException as error:
            if logging_level() == logging.DEBUG:
                raise
            click.echo("Error: {0}".format(error), err=True)
            sys.exit(
                ExitStatus.CAP_EXCEEDED
                if isinstance(error, CapExceededError)
                else ExitStatus.INPUT_ERROR
            )

    return decorated


def write(
    var: Any,
    output_format: str = "text",
    no_colour: bool = True,
) -> None:
    """
    Writes ``var`` to stdout. If output_format is set to "json" or "yaml",
    write ``var`` as a JSON or YAML string; objects with a ``to_dict`` method
    are written as that dictionary.

    :param var: The object to print
    :param output_format: The format to print the output as. Allowed values: \
    "text", "json", "yaml"
    :param no_colour: Whether to colour verdict words
    """
    if output_format == "json":
        output = _generate_json(var)
    elif output_format == "yaml":
        output = _generate_yaml(var)
    else:
        output = _generate_text(var)

    if not no_colour and output_format == "text":
        output = VerdictColourer().colour(output)

    click.echo(output)


def _as_data(stream):
    if hasattr(stream, "to_dict"):
        return stream.to_dict()
    if isinstance(stream, (list, tuple)):
        return [_as_data(item) for item in stream]
    return stream


def _generate_json(stream):
    return CustomJsonEncoder(indent=4).encode(_as_data(stream))


def _generate_yaml(stream):
    return yaml.dump(
        _as_data(stream),
        Dumper=ModelYamlDumper,
        default_flow_style=False,
        explicit_start=True,
        sort_keys=False,
        allow_unicode=True,
    )


def _generate_text(stream):
    if isinstance(stream, (list, tuple)):
        return "\n".join(str(item) for item in stream)
    return str(stream)


def setup_logging(debug, no_colour):
    """
    Sets up logging.

    Library modules log through ``logging.getLogger(__name__)`` below the
    ``moodal`` logger, which is silent until this function installs a
    handler. The log format is set to "[%(asctime)s] - %(message)s" and the
    date format is set to "%Y-%m-%d %H:%M:%S".

    :param debug: A flag indication whether to turn on debug logging.
    :type debug: bool
    :no_colour: A flag to indicating whether to turn off coloured output.
    :type no_colour: bool
    :returns: A logger.
    :rtype: logging.Logger
    """
    moodal_logging_level = logging.DEBUG if debug else logging.WARNING

    formatter_class = logging.Formatter if no_colour else ColouredFormatter

    formatter = formatter_class(
        fmt="[%(asctime)s] - %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
    )

    log_handler = logging.StreamHandler()
    log_handler.setFormatter(formatter)
    logger = logging.getLogger("moodal")
    logger.addHandler(log_handler)
    logger.setLevel(moodal_logging_level)
    return logger


class ColouredFormatter(logging.Formatter):
    """
    ColouredFormatter add colours to all verdict words that appear in log
    messages.
    """

    verdict_colourer = VerdictColourer()

    def format(self, record):
        """
        Colours and returns all verdict words in ``record``.

        :param record: The log item to format.
        :type record: str
        :returns: str
        """
        response = super(ColouredFormatter, self).format(record)
        coloured_response = self.verdict_colourer.colour(response)
        return coloured_response


class CustomJsonEncoder(json.JSONEncoder):
    """
    CustomJsonEncoder writes Decimals as numbers and encodes every other
    unknown item by calling its __str__() method.
    """

    def default(self, item):
        """
        Returns a JSON-compatible version of item.

        :param item: An arbitrary object to encode.
        :type item: object
        :returns: The encodable value.
        """
        if isinstance(item, Decimal):
            return int(item) if item == item.to_integral_value() else float(item)
        if isinstance(item, (set, frozenset)):
            return sorted(item)
        return str(item)
