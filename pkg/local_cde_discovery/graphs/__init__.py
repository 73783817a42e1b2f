# Location: local_cde_discovery/graphs/__init__.py
"""
Graph Core

DAGs, local essential graphs, d-separation, CPDAGs, Meek rules and the text
formats for both graph kinds.
"""

from local_cde_discovery.graphs.cpdag import dag_to_cpdag
from local_cde_discovery.graphs.dag import Dag, descendants, hop_neighborhood, parents
from local_cde_discovery.graphs.dsep import d_separated
from local_cde_discovery.graphs.leg import EdgeMark, Leg, LegBuilder, MarkedEdge
from local_cde_discovery.graphs.orientation import (
    apply_meek_rules,
    orient_unshielded_colliders,
)

__all__ = [
    "Dag",
    "EdgeMark",
    "Leg",
    "LegBuilder",
    "MarkedEdge",
    "apply_meek_rules",
    "d_separated",
    "dag_to_cpdag",
    "descendants",
    "hop_neighborhood",
    "orient_unshielded_colliders",
    "parents",
]
