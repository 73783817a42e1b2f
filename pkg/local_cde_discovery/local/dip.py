# Location: local_cde_discovery/local/dip.py
"""
Descendant Inducing Paths

Path witnesses for descendant inducing neighbors: a skeleton path from A to B
whose colliders are exactly its interior landmarks, the landmarks being the
path nodes adjacent to A, each landmark a descendant of the one before.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import networkx as nx

from local_cde_discovery.core.exceptions import WitnessError
from local_cde_discovery.graphs.dag import Dag

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DipWitness:
    """A skeleton path and its ordered landmarks."""

    path: Tuple[int, ...]
    landmarks: Tuple[int, ...]

    @property
    def source(self) -> int:
        return self.path[0]

    @property
    def sink(self) -> int:
        return self.path[-1]


def path_colliders(g: Dag, path: Sequence[int]) -> FrozenSet[int]:
    """Interior nodes of ``path`` with both path edges pointing into them."""
    return frozenset(
        path[i]
        for i in range(1, len(path) - 1)
        if g.has_edge(path[i - 1], path[i]) and g.has_edge(path[i + 1], path[i])
    )


def dip_landmarks(g: Dag, path: Sequence[int]) -> Tuple[int, ...]:
    """
    Landmarks of ``path``: its endpoints plus the path nodes adjacent to the
    source, in path order.
    """
    a, b = path[0], path[-1]
    near = g.neighbors(a)
    return tuple(v for v in path if v in (a, b) or v in near)


def _validate(g: Dag, w: DipWitness) -> None:
    path = w.path
    if len(path) < 2 or len(set(path)) != len(path):
        raise WitnessError(f"Not a simple path: {list(path)}")
    for u, v in zip(path, path[1:]):
        if not 0 <= u < g.n or not 0 <= v < g.n or not g.adjacent(u, v):
            raise WitnessError(f"Path step {u} - {v} is not a skeleton edge")
    position = 0
    for landmark in w.landmarks:
        try:
            position = path.index(landmark, position) + 1
        except ValueError:
            raise WitnessError(
                f"Landmarks {list(w.landmarks)} are not an ordered "
                f"subsequence of {list(path)}"
            ) from None


def check_dip(g: Dag, w: DipWitness) -> bool:
    """
    Check a descendant inducing path witness against ``g``.

    Args:
        g: The DAG
        w: Path and claimed landmarks

    Returns:
        True iff the landmarks are the ones the path induces, the colliders
        are exactly the interior landmarks, each landmark descends from the
        previous one, and the endpoints are not adjacent

    Raises:
        WitnessError: If the path is not a simple skeleton path or the
            landmarks do not lie on it in order
    """
    _validate(g, w)
    if w.landmarks != dip_landmarks(g, w.path):
        return False
    if g.adjacent(w.source, w.sink):
        return False
    if path_colliders(g, w.path) != frozenset(w.landmarks[1:-1]):
        return False
    return all(
        later in g.descendants(earlier)
        for earlier, later in zip(w.landmarks, w.landmarks[1:])
    )


def find_dip_witness(g: Dag, a: int, b: int) -> Optional[DipWitness]:
    """
    Shortest descendant inducing path from ``a`` to ``b``, ties broken by
    the path's node sequence.

    Enumerates every simple skeleton path, so only suited to small graphs.
    """
    if a == b or g.adjacent(a, b):
        return None
    paths = sorted(nx.all_simple_paths(g.skeleton_graph(), a, b), key=_path_key)
    for path in paths:
        witness = DipWitness(tuple(path), dip_landmarks(g, path))
        if check_dip(g, witness):
            return witness
    return None


def _path_key(path: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    return len(path), tuple(path)


def dip_neighbors(g: Dag, a: int) -> Dict[int, DipWitness]:
    """
    Descendant inducing neighbors of ``a`` found by path enumeration.

    Args:
        g: The DAG
        a: Source node

    Returns:
        Map from each neighbor found to its witness
    """
    found: Dict[int, DipWitness] = {}
    for b in range(g.n):
        witness = find_dip_witness(g, a, b)
        if witness is not None:
            found[b] = witness
    logger.debug(f"Path enumeration found {len(found)} DIP neighbors of {a}")
    return found
