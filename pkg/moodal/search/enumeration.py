# -*- coding: utf-8 -*-

"""
moodal.search.enumeration

Exhaustive enumeration of small preference models. Worlds are named w1..wn.
Every agent gets every partition of the worlds and every strict partial
order on them, every variable every subset of worlds. With pruning on, only
the candidate whose encoding is least under all world permutations is kept
from each isomorphism class.
"""
import logging
from functools import lru_cache
from itertools import permutations, product
from typing import FrozenSet, Iterator, List, Tuple

import networkx as nx

from moodal.exceptions import CapExceededError
from moodal.model.graph import labelled_graph
from moodal.model.models import EpistemicModel, normalise_partition
from moodal.search.bounds import SearchBounds

logger = logging.getLogger(__name__)

IndexBlock = FrozenSet[int]
IndexOrder = FrozenSet[Tuple[int, int]]


@lru_cache(maxsize=None)
def set_partitions(size: int) -> Tuple[Tuple[IndexBlock, ...], ...]:
    """
    Returns every partition of ``range(size)``, generated from restricted
    growth strings so each partition appears once.
    """
    results = []

    def grow(labels: List[int], blocks: int):
        if len(labels) == size:
            results.append(
                tuple(
                    frozenset(i for i, label in enumerate(labels) if label == block)
                    for block in range(blocks)
                )
            )
            return
        for label in range(blocks + 1):
            grow(labels + [label], max(blocks, label + 1))

    grow([], 0)
    return tuple(results)


@lru_cache(maxsize=None)
def strict_orders(size: int) -> Tuple[IndexOrder, ...]:
    """
    Returns every strict partial order on ``range(size)``. Orders grow one
    edge at a time from the empty order; an edge against an existing pair
    would close a cycle and is skipped.
    """
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        grown = []
        for order in frontier:
            for lower, upper in permutations(range(size), 2):
                if (lower, upper) in order or (upper, lower) in order:
                    continue
                graph = nx.DiGraph()
                graph.add_nodes_from(range(size))
                graph.add_edges_from(order)
                graph.add_edge(lower, upper)
                closed = frozenset(nx.transitive_closure_dag(graph).edges())
                if closed not in seen:
                    seen.add(closed)
                    grown.append(closed)
        frontier = grown
    return tuple(sorted(seen, key=lambda order: (len(order), sorted(order))))


@lru_cache(maxsize=None)
def _permutations(size: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(permutations(range(size)))


def _encode(size, partitions, orders, valuations, perm) -> Tuple[int, ...]:
    # perm maps an old world index to its new index
    inverse = [0] * size
    for old, new in enumerate(perm):
        inverse[new] = old
    code = []
    for partition in partitions:
        block_of = {world: index for index, block in enumerate(partition) for world in block}
        labels = {}
        for new in range(size):
            code.append(labels.setdefault(block_of[inverse[new]], len(labels)))
    for order in orders:
        code.append(sum(1 << (perm[lower] * size + perm[upper]) for lower, upper in order))
    for truth in valuations:
        code.append(sum(1 << perm[world] for world in truth))
    return tuple(code)


def is_canonical(size, partitions, orders, valuations) -> bool:
    perms = _permutations(size)
    identity = _encode(size, partitions, orders, valuations, perms[0])
    return all(
        identity <= _encode(size, partitions, orders, valuations, perm)
        for perm in perms[1:]
    )


def candidate_count(bounds: SearchBounds) -> int:
    """
    Returns how many candidates the unpruned enumeration would produce.
    """
    total = 0
    for size in range(bounds.min_worlds, bounds.max_worlds + 1):
        per_agent = len(set_partitions(size)) * len(strict_orders(size))
        total += per_agent ** len(bounds.agents) * 2 ** (size * len(bounds.variables))
    return total


def world_names(size: int) -> Tuple[str, ...]:
    return tuple("w{0}".format(index + 1) for index in range(size))


def build_model(name, size, agents, variables, partitions, orders, valuations):
    worlds = world_names(size)
    return EpistemicModel(
        name=name,
        agents=tuple(agents),
        variables=tuple(variables),
        worlds=worlds,
        indist={
            agent: normalise_partition(
                worlds, [[worlds[i] for i in sorted(block)] for block in partition]
            )
            for agent, partition in zip(agents, partitions)
        },
        valuation={
            variable: frozenset(worlds[i] for i in truth)
            for variable, truth in zip(variables, valuations)
        },
        pref={
            agent: frozenset((worlds[lower], worlds[upper]) for lower, upper in order)
            for agent, order in zip(agents, orders)
        },
    )


def enumerate_models(bounds: SearchBounds, prune: bool = True) -> Iterator[EpistemicModel]:
    """
    Yields preference models within ``bounds`` in a fixed order: by number of
    worlds, then partitions, then preferences, then valuation.

    :param prune: Keep one representative per isomorphism class.
    :raises: moodal.exceptions.CapExceededError if the number of candidates
        exceeds ``bounds.cap``.
    """
    count = candidate_count(bounds)
    if count > bounds.cap:
        raise CapExceededError("candidate models", count, bounds.cap)

    agents, variables = bounds.agents, bounds.variables
    index = 0
    for size in range(bounds.min_worlds, bounds.max_worlds + 1):
        subsets = [
            frozenset(i for i in range(size) if mask >> i & 1) for mask in range(2 ** size)
        ]
        yielded = 0
        for partitions in product(set_partitions(size), repeat=len(agents)):
            for orders in product(strict_orders(size), repeat=len(agents)):
                for valuations in product(subsets, repeat=len(variables)):
                    if prune and not is_canonical(size, partitions, orders, valuations):
                        continue
                    index += 1
                    yielded += 1
                    yield build_model(
                        "m{0}".format(index),
                        size,
                        agents,
                        variables,
                        partitions,
                        orders,
                        valuations,
                    )
        logger.debug("Enumerated %d models with %d worlds", yielded, size)


def _same_truths(left, right):
    return left["truths"] == right["truths"]


def _same_labels(left, right):
    return left["labels"] == right["labels"]


def isomorphic(left: EpistemicModel, right: EpistemicModel) -> bool:
    """
    Returns whether the models are equal up to renaming worlds.
    """
    if set(left.agents) != set(right.agents) or set(left.variables) != set(
        right.variables
    ):
        return False
    if len(left.worlds) != len(right.worlds):
        return False
    return nx.is_isomorphic(
        labelled_graph(left),
        labelled_graph(right),
        node_match=_same_truths,
        edge_match=_same_labels,
    )
