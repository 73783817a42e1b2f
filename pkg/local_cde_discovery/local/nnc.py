# Location: local_cde_discovery/local/nnc.py
"""
No-Non-Collider Rule

Decides whether a boundary edge D - A receives a double-bar mark. The same
predicate serves the oracle construction and CI-driven discovery; only the
separation test differs.
"""

import logging
from typing import AbstractSet, Iterable, List

from local_cde_discovery.local.adjacency import SeparationTest, first_separating_set

logger = logging.getLogger(__name__)


def nnc_double_bar(
    separated: SeparationTest,
    d: int,
    a: int,
    adjacency: AbstractSet[int],
    outside: Iterable[int],
) -> bool:
    """
    Whether ``d || a`` should be marked.

    Every outside node W must be separable from ``d`` by a subset of the
    adjacency of ``d`` without ``a``; taking the first such set S, at least
    one W must become dependent on ``d`` given S plus ``a``, which makes
    ``a`` a collider between them.

    Args:
        separated: Separation test, d-separation or CI
        d: Endpoint inside the neighborhood
        a: Endpoint outside the neighborhood
        adjacency: Current adjacency of ``d``
        outside: Nodes neither in the neighborhood nor adjacent to ``d``

    Returns:
        True if the double bar applies; False when there are no outside nodes
    """
    pool = sorted(set(adjacency) - {a})
    witness = False
    for w in outside:
        sepset = first_separating_set(separated, d, w, pool)
        if sepset is None:
            return False
        if not witness and not separated(d, w, sepset | {a}):
            witness = True
    return witness


def outside_nodes(
    n: int, neighborhood: AbstractSet[int], adjacency: AbstractSet[int]
) -> List[int]:
    """Nodes outside both the neighborhood and the given adjacency, sorted."""
    return [v for v in range(n) if v not in neighborhood and v not in adjacency]
