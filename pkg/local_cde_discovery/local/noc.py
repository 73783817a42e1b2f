# Location: local_cde_discovery/local/noc.py
"""
Non-Orientability Criterion

Certifies early that edges around the target can never be oriented at larger
hops, and reads controlled-direct-effect identifiability off a graph.
"""

import logging
from typing import AbstractSet, FrozenSet, Set

from local_cde_discovery.graphs.leg import Leg

logger = logging.getLogger(__name__)


def grow_noc_candidate(leg: Leg, seed: AbstractSet[int]) -> FrozenSet[int]:
    """
    Close ``seed`` under non-arrow neighbors inside the hop neighborhood.

    Undirected and double-bar marks both count as non-arrow.

    Args:
        leg: The LEG
        seed: Starting nodes, normally the target

    Returns:
        The fixpoint candidate set
    """
    hood = leg.neighborhood()
    grown: Set[int] = set(seed)
    stack = sorted(grown)
    while stack:
        d = stack.pop()
        for a in leg.non_arrow_neighbors(d):
            if a in hood and a not in grown:
                grown.add(a)
                stack.append(a)
    return frozenset(grown)


def noc_satisfied(leg: Leg, d_set: AbstractSet[int]) -> bool:
    """
    Check the non-orientability criterion for ``d_set``.

    No member may have an undirected edge leaving the set, and each member
    may have at most one double-bar edge leaving it. The criterion is only
    defined from hop 1 on and for sets inside the hop neighborhood; anything
    else is reported as not satisfied.

    Args:
        leg: The LEG
        d_set: Candidate node set

    Returns:
        True if the criterion holds
    """
    if leg.hop < 1 or not d_set:
        return False
    if not set(d_set) <= leg.neighborhood():
        logger.debug("NOC candidate leaves the hop neighborhood")
        return False
    for d in d_set:
        if leg.undirected_neighbors(d) - d_set:
            return False
        if len(leg.double_bar_neighbors(d) - d_set) > 1:
            return False
    return True


def cde_identifiable_from_graph(p: Leg, y: int) -> bool:
    """True iff ``y`` has no undirected or double-bar edge."""
    return not p.non_arrow_neighbors(y)


def cde_identifiable(p: Leg, x: int, y: int) -> bool:
    """
    Verdict for the pair: ``x`` is not adjacent to ``y``, is a child of
    ``y``, or every edge at ``y`` is oriented.
    """
    return (
        x not in p.neighbors(y)
        or p.is_directed(y, x)
        or cde_identifiable_from_graph(p, y)
    )
