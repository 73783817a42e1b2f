# Location: local_cde_discovery/graphs/dsep.py
"""
d-Separation

Reachability-based d-separation on a DAG (moralized ancestral construction,
as implemented by networkx).
"""

from typing import AbstractSet

import networkx as nx

from local_cde_discovery.core.exceptions import GraphError
from local_cde_discovery.graphs.dag import Dag


def d_separated(g: Dag, x: int, y: int, z: AbstractSet[int]) -> bool:
    """
    Test whether ``z`` d-separates ``x`` and ``y`` in ``g``.

    Args:
        g: The DAG
        x: First node
        y: Second node, distinct from x
        z: Conditioning set, excluding x and y

    Returns:
        True iff every path between x and y is blocked by z

    Raises:
        GraphError: If x == y or either endpoint is in z
    """
    if x == y:
        raise GraphError(f"d-separation needs two distinct nodes, got {x} twice")
    if x in z or y in z:
        raise GraphError(f"Endpoints {x}, {y} must not be conditioned on")
    return bool(nx.is_d_separator(g.graph, {x}, {y}, set(z)))
