# Location: local_cde_discovery/graphs/cpdag.py
"""
Essential Graphs

CPDAG construction from a DAG.
"""

import logging

from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.leg import Leg, LegBuilder
from local_cde_discovery.graphs.orientation import meek_closure

logger = logging.getLogger(__name__)


def dag_to_cpdag(g: Dag) -> Leg:
    """
    Essential graph of the Markov equivalence class of ``g``.

    The skeleton of ``g`` with its v-structures oriented and the Meek closure
    applied; everything else stays undirected. The result is a Leg whose hop
    equals the node count, targeted at node 0.

    Args:
        g: The DAG

    Returns:
        The CPDAG
    """
    builder = LegBuilder(g.n, target=0, hop=g.n, names=g.names)
    for tail, head in sorted(g.edges):
        builder.add_undirected(tail, head)
    for a, b, c in sorted(g.v_structures()):
        builder.orient(a, b)
        builder.orient(c, b)
    meek_closure(builder, frozenset(range(g.n)))
    return builder.freeze()
