# -*- coding: utf-8 -*-

"""
moodal.model.graph

Graph views of models built on networkx: transitive closure of preference
edges with cycle rejection, Hasse diagrams for serialisation, the labelled
graph used for isomorphism checks and a Graphviz rendering.
"""
import logging
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

import networkx as nx

from moodal.exceptions import CycleError, UnknownWorldError

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


def preference_digraph(edges: Iterable[Pair], worlds: Iterable[str] = ()) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(worlds)
    graph.add_edges_from(edges)
    return graph


def cyclic_worlds(graph: nx.DiGraph, order: Sequence[str] = ()) -> Tuple[str, ...]:
    """
    Returns the worlds that lie on a cycle of ``graph``, in ``order`` where given.
    """
    on_cycle = set(nx.nodes_with_selfloops(graph))
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            on_cycle.update(component)
    ranking = {world: index for index, world in enumerate(order)}
    return tuple(sorted(on_cycle, key=lambda world: (ranking.get(world, len(ranking)), world)))


def close_preferences(
    edges: Mapping[str, Iterable[Pair]], worlds: Optional[Sequence[str]] = None
) -> Dict[str, FrozenSet[Pair]]:
    """
    Returns the least transitive relation containing each agent's edges.

    :param edges: Agent to generating edges (u, v), meaning u ≺ v.
    :param worlds: Declared worlds; when given, edges must stay inside them.
    :raises: moodal.exceptions.UnknownWorldError for an undeclared world.
    :raises: moodal.exceptions.CycleError when the closure relates a world to itself.
    """
    closed = {}
    known = set(worlds) if worlds is not None else None
    for agent, agent_edges in edges.items():
        agent_edges = [tuple(edge) for edge in agent_edges]
        if known is not None:
            for edge in agent_edges:
                for world in edge:
                    if world not in known:
                        raise UnknownWorldError(
                            "Preference edge {0} of agent '{1}' names unknown "
                            "world '{2}'".format(edge, agent, world)
                        )
        graph = preference_digraph(agent_edges, worlds or ())
        if not nx.is_directed_acyclic_graph(graph):
            world = cyclic_worlds(graph, worlds or ())[0]
            raise CycleError(agent, world)
        closed[agent] = frozenset(nx.transitive_closure_dag(graph).edges())
        logger.debug(
            "Closed %d preference edges of agent '%s' to %d pairs",
            len(agent_edges),
            agent,
            len(closed[agent]),
        )
    return closed


def hasse_edges(pairs: Iterable[Pair], worlds: Sequence[str] = ()) -> Tuple[Pair, ...]:
    """
    Returns the covering pairs of a strict partial order, sorted by world order.
    Pairs that do not form a DAG are returned unchanged.
    """
    graph = preference_digraph(pairs, worlds)
    if nx.is_directed_acyclic_graph(graph):
        graph = nx.transitive_reduction(graph)
    ranking = {world: index for index, world in enumerate(worlds)}
    return tuple(
        sorted(
            graph.edges(),
            key=lambda edge: (
                ranking.get(edge[0], len(ranking)),
                ranking.get(edge[1], len(ranking)),
                edge,
            ),
        )
    )


def labelled_graph(model) -> nx.DiGraph:
    """
    Returns a digraph over the worlds of a preference model. Each node carries
    the variables true there; each edge carries the set of relation labels it
    belongs to: ("~", agent) for indistinguishability and ("<", agent) for
    preference.
    """
    graph = nx.DiGraph()
    for world in model.worlds:
        truths = frozenset(
            variable
            for variable in model.variables
            if world in model.valuation.get(variable, ())
        )
        graph.add_node(world, truths=truths)

    def label(source, target, tag):
        if graph.has_edge(source, target):
            graph[source][target]["labels"] = graph[source][target]["labels"] | {tag}
        else:
            graph.add_edge(source, target, labels=frozenset([tag]))

    for agent in model.agents:
        for block in model.indist.get(agent, ()):
            for source in block:
                for target in block:
                    if source != target:
                        label(source, target, ("~", agent))
        for source, target in model.pref.get(agent, ()):
            label(source, target, ("<", agent))
    return graph


def to_dot(model) -> str:
    """
    Renders a preference model as Graphviz text: dashed undirected edges for
    indistinguishability, solid arrows for the covering preference pairs.
    """
    lines = ['digraph "{0}" {{'.format(model.name)]
    for world in model.worlds:
        truths = [
            variable
            for variable in model.variables
            if world in model.valuation.get(variable, ())
        ]
        lines.append(
            '  "{0}" [label="{0}\\n{1}"];'.format(world, ", ".join(truths))
        )
    for agent in model.agents:
        for block in model.indist.get(agent, ()):
            members = [world for world in model.worlds if world in block]
            for index, source in enumerate(members):
                for target in members[index + 1 :]:
                    lines.append(
                        '  "{0}" -> "{1}" [dir=none, style=dashed, label="{2}"];'.format(
                            source, target, agent
                        )
                    )
        pref = getattr(model, "pref", {}).get(agent, ())
        for source, target in hasse_edges(pref, model.worlds):
            lines.append(
                '  "{0}" -> "{1}" [label="{2}"];'.format(source, target, agent)
            )
    lines.append("}")
    return "\n".join(lines)
