# -*- coding: utf-8 -*-

"""
moodal.context

This module implements the MoodalContext class which holds the settings of a
single Moodal invocation: output style, resource caps and worker counts.
"""
import os

DEFAULT_CAP = 1000000
DEFAULT_PAIR_CAP = 20000
DEFAULT_WORKERS = 1
DEFAULT_SEARCH_DEPTH = 3
CAP_ENVIRONMENT_VARIABLE = "MOODAL_CAP"


def default_cap():
    """
    Returns the enumeration cap, honouring ``MOODAL_CAP`` when it is set.

    :returns: The cap.
    :rtype: int
    """
    value = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
    if value is None or not value.strip():
        return DEFAULT_CAP
    try:
        cap = int(value)
    except ValueError:
        return DEFAULT_CAP
    return cap if cap > 0 else DEFAULT_CAP


class MoodalContext(object):
    """
    MoodalContext is a place that holds data that is relevant to one
    invocation, whether it comes from the CLI or from library callers.

    :param output_format: Specify the output format. Available formats:\
            [text, yaml, json]
    :type output_format: str

    :param no_colour: Specify whether colouring should be used in the CLI\
            output
    :type no_colour: bool

    :param trace: Whether verdicts carry an explanation trace.
    :type trace: bool

    :param cap: Upper bound on enumerated formulas, models or instances.
    :type cap: int

    :param pair_cap: Upper bound on instances per two-slot axiom schema.
    :type pair_cap: int

    :param workers: Number of threads used by sweeps and searches.
    :type workers: int
    """

    def __init__(
        self,
        output_format=None,
        no_colour=False,
        trace=False,
        cap=None,
        pair_cap=None,
        workers=None,
    ):
        self.output_format = output_format if output_format else "text"
        self.no_colour = no_colour if no_colour is True else False
        self.trace = trace if trace is True else False
        self.cap = cap if cap else default_cap()
        self.pair_cap = pair_cap if pair_cap else DEFAULT_PAIR_CAP
        self.workers = workers if workers else DEFAULT_WORKERS

    @classmethod
    def from_click(cls, obj):
        """
        Builds a context from the ``ctx.obj`` dictionary set up by the CLI group.

        :param obj: The click context object.
        :type obj: dict
        """
        obj = obj or {}
        return cls(
            output_format=obj.get("output_format"),
            no_colour=obj.get("no_colour", False),
            trace=obj.get("trace", False),
            cap=obj.get("cap"),
            workers=obj.get("workers"),
        )
