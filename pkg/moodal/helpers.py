# -*- coding: utf-8 -*-
import logging
from typing import Iterable, Sequence, Tuple, TypeVar

T = TypeVar("T")


def logging_level():
    """
    Return the logging level.
    """
    logger = logging.getLogger(__name__)
    return logger.getEffectiveLevel()


def ordered_subset(order: Sequence[T], items: Iterable[T]) -> Tuple[T, ...]:
    """
    Returns the members of ``items`` arranged in the order they appear in
    ``order``. Members missing from ``order`` are dropped.

    :param order: The declared order, e.g. the worlds of a model.
    :param items: Any collection of members of ``order``.
    :returns: A tuple in declaration order.
    """
    wanted = set(items)
    return tuple(item for item in order if item in wanted)


def first_duplicate(items: Iterable[T]):
    """
    Returns the first item that occurs twice in ``items``, or None.
    """
    seen = set()
    for item in items:
        if item in seen:
            return item
        seen.add(item)
    return None
