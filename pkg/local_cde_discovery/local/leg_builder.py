# Location: local_cde_discovery/local/leg_builder.py
"""
Oracle LEG Construction

Builds the local essential graph of a known DAG around a target, step by
step: local skeleton, boundary edges to true and spurious neighbors, local
unshielded colliders, Meek closure in the neighborhood, then double bars.
"""

import logging
from typing import Dict, FrozenSet

import networkx as nx

from local_cde_discovery.core.exceptions import GraphError
from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.leg import Leg, LegBuilder
from local_cde_discovery.graphs.orientation import meek_closure
from local_cde_discovery.local.adjacency import (
    SeparationTest,
    memoized_dsep,
    spurious_neighbors,
)
from local_cde_discovery.local.nnc import nnc_double_bar, outside_nodes

logger = logging.getLogger(__name__)


def build_true_leg(g: Dag, y: int, h: int) -> Leg:
    """
    The LEG of ``g`` around ``y`` at hop ``h``.

    Args:
        g: The DAG
        y: Target node
        h: Hop count, h >= 0

    Returns:
        The local essential graph

    Raises:
        GraphError: If h is negative
    """
    if h < 0:
        raise GraphError(f"Hop count must be non-negative, got {h}")
    separated = memoized_dsep(g)
    distances: Dict[int, int] = nx.single_source_shortest_path_length(
        g.skeleton_graph(), y, cutoff=h
    )
    hood = frozenset(distances)
    boundary = sorted(v for v, dist in distances.items() if dist == h)

    builder = LegBuilder(g.n, target=y, hop=h, names=g.names)
    for tail, head in sorted(g.edges):
        if tail in hood and head in hood:
            builder.add_undirected(tail, head)

    for d in boundary:
        reach = (g.neighbors(d) | spurious_neighbors(g, d, separated)) - hood
        for a in sorted(reach):
            builder.add_undirected(d, a)

    for a, b, c in sorted(g.v_structures()):
        if a in hood and b in hood and c in hood:
            builder.orient(a, b)
            builder.orient(c, b)

    meek_closure(builder, hood)
    marked = mark_double_bars(builder, hood, separated)
    logger.debug(
        f"Oracle LEG around {g.names[y]} at hop {h}: {len(hood)} nodes in "
        f"neighborhood, {marked} double bars"
    )
    return builder.freeze()


def mark_double_bars(
    builder: LegBuilder, hood: FrozenSet[int], separated: SeparationTest
) -> int:
    """
    Apply the no-non-collider rule to every undirected boundary edge.

    Args:
        builder: LEG under construction, oriented inside the neighborhood
        hood: The hop neighborhood
        separated: Separation test used by the rule

    Returns:
        Number of double bars placed
    """
    candidates = [
        (d, a)
        for d in sorted(hood)
        for a in builder.undirected_neighbors(d)
        if a not in hood
    ]
    marked = 0
    for d, a in candidates:
        adjacency = builder.neighbors(d)
        outside = outside_nodes(builder.n, hood, adjacency)
        if nnc_double_bar(separated, d, a, adjacency, outside):
            marked += 1
            builder.set_double_bar(d, a)
    return marked
