# Location: local_cde_discovery/local/adjacency.py
"""
Adjacency Traces

What a PC-style search restricted to one node keeps adjacent to it, level by
level, and which of the survivors are not true neighbors.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Optional, Tuple

from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.dsep import d_separated
from local_cde_discovery.utils.subsets import subsets_of_size, subsets_up_to

logger = logging.getLogger(__name__)

SeparationTest = Callable[[int, int, FrozenSet[int]], bool]


def memoized_dsep(g: Dag) -> SeparationTest:
    """d-separation in ``g`` with answers cached by canonical query."""
    cache: Dict[Tuple[int, int, FrozenSet[int]], bool] = {}

    def separated(a: int, b: int, z: FrozenSet[int]) -> bool:
        key = (min(a, b), max(a, b), z)
        if key not in cache:
            cache[key] = d_separated(g, a, b, z)
        return cache[key]

    return separated


@dataclass(frozen=True)
class AdjacencyTrace:
    """
    Nodes still adjacent to ``target`` after each pruning level.

    ``sets[0]`` holds every other node; ``sets[s]`` keeps the members of
    ``sets[s - 1]`` that no subset of ``sets[s - 1]`` of size ``s - 1``
    separates from the target. The last set is the fixpoint.
    """

    target: int
    sets: Tuple[FrozenSet[int], ...]

    @property
    def final(self) -> FrozenSet[int]:
        return self.sets[-1]


def adjacency_trace(
    g: Dag, d: int, separated: Optional[SeparationTest] = None
) -> AdjacencyTrace:
    """
    Level-wise adjacency of ``d`` under PC-style pruning on ``g``.

    Levels run until every conditioning size up to ``n - 2`` has been tried.

    Args:
        g: The DAG
        d: Target node
        separated: Optional memoized d-separation test for ``g``

    Returns:
        The trace C_0, C_1, ...
    """
    sep = separated or memoized_dsep(g)
    current = frozenset(range(g.n)) - {d}
    sets = [current]
    for s in range(1, g.n):
        survivors = frozenset(
            a
            for a in current
            if not any(sep(d, a, z) for z in subsets_of_size(current - {a}, s - 1))
        )
        sets.append(survivors)
        current = survivors
    return AdjacencyTrace(target=d, sets=tuple(sets))


def spurious_neighbors(
    g: Dag, d: int, separated: Optional[SeparationTest] = None
) -> FrozenSet[int]:
    """
    Non-neighbors of ``d`` that survive every pruning level.

    Args:
        g: The DAG
        d: Target node
        separated: Optional memoized d-separation test for ``g``

    Returns:
        The spurious neighbors of ``d``
    """
    return adjacency_trace(g, d, separated).final - g.neighbors(d)


def first_separating_set(
    separated: SeparationTest, d: int, w: int, pool: Iterable[int]
) -> Optional[FrozenSet[int]]:
    """
    First subset of ``pool`` separating ``d`` and ``w``.

    Subsets are tried by ascending size, then lexicographically.

    Returns:
        The separating set, or None if no subset of the pool separates
    """
    for z in subsets_up_to(set(pool) - {d, w}):
        if separated(d, w, z):
            return z
    return None


def descendant_inducing_neighbors(
    g: Dag, a: int, separated: Optional[SeparationTest] = None
) -> FrozenSet[int]:
    """
    Non-neighbors of ``a`` that no subset of its neighbors separates from it.

    Args:
        g: The DAG
        a: Source node
        separated: Optional memoized d-separation test for ``g``

    Returns:
        The descendant inducing neighbors of ``a``
    """
    sep = separated or memoized_dsep(g)
    neighbors = g.neighbors(a)
    return frozenset(
        b
        for b in range(g.n)
        if b != a
        and b not in neighbors
        and first_separating_set(sep, a, b, neighbors) is None
    )
