# Location: local_cde_discovery/graphs/orientation.py
"""
Edge Orientation

Unshielded-collider orientation from separating sets and the four Meek rules,
both restricted to a node scope: a rule fires only when every node of its
pattern lies in scope. Double-bar edges never act as arrows or as undirected
edges here, but they do count as adjacencies.
"""

import logging
from typing import AbstractSet, Callable, List

from local_cde_discovery.ci.sepsets import SepsetCache
from local_cde_discovery.graphs.leg import Leg, LegBuilder

logger = logging.getLogger(__name__)


def _rule1(p: LegBuilder, scope: AbstractSet[int]) -> bool:
    """a -> b -- c, a and c nonadjacent: orient b -> c."""
    changed = False
    for b in sorted(scope):
        for c in p.undirected_neighbors(b):
            if c not in scope:
                continue
            for a in p.parents(b):
                if a in scope and a != c and not p.adjacent(a, c):
                    changed |= p.orient(b, c)
                    break
    return changed


def _rule2(p: LegBuilder, scope: AbstractSet[int]) -> bool:
    """a -> b -> c with a -- c: orient a -> c."""
    changed = False
    for a, c in p.undirected_pairs():
        if a not in scope or c not in scope:
            continue
        for x, z in ((a, c), (c, a)):
            if any(b in scope and p.is_directed(b, z) for b in _children(p, x)):
                changed |= p.orient(x, z)
                break
    return changed


def _rule3(p: LegBuilder, scope: AbstractSet[int]) -> bool:
    """a -- c -> b and a -- d -> b, c and d nonadjacent, a -- b: orient a -> b."""
    changed = False
    for a, b in p.undirected_pairs():
        if a not in scope or b not in scope:
            continue
        for x, z in ((a, b), (b, a)):
            candidates = [
                c
                for c in p.undirected_neighbors(x)
                if c in scope and c != z and p.is_directed(c, z)
            ]
            if _has_nonadjacent_pair(p, candidates):
                changed |= p.orient(x, z)
                break
    return changed


def _rule4(p: LegBuilder, scope: AbstractSet[int]) -> bool:
    """a -- c -> d -> b, a adjacent to d, c and b nonadjacent, a -- b: orient a -> b."""
    changed = False
    for a, b in p.undirected_pairs():
        if a not in scope or b not in scope:
            continue
        for x, z in ((a, b), (b, a)):
            if _rule4_chain(p, scope, x, z):
                changed |= p.orient(x, z)
                break
    return changed


def _rule4_chain(p: LegBuilder, scope: AbstractSet[int], a: int, b: int) -> bool:
    for d in p.parents(b):
        if d not in scope or d == a or not p.adjacent(a, d):
            continue
        for c in p.parents(d):
            if (
                c in scope
                and c not in (a, b)
                and p.is_undirected(a, c)
                and not p.adjacent(c, b)
            ):
                return True
    return False


def _children(p: LegBuilder, v: int) -> List[int]:
    return sorted(u for u in p.neighbors(v) if p.is_directed(v, u))


def _has_nonadjacent_pair(p: LegBuilder, nodes: List[int]) -> bool:
    for i, c in enumerate(nodes):
        for d in nodes[i + 1 :]:
            if not p.adjacent(c, d):
                return True
    return False


MEEK_RULES: List[Callable[[LegBuilder, AbstractSet[int]], bool]] = [
    _rule1,
    _rule2,
    _rule3,
    _rule4,
]


def meek_closure(p: LegBuilder, scope: AbstractSet[int]) -> int:
    """
    Apply Meek rules 1-4 in place until none fires.

    Args:
        p: Builder to orient
        scope: Nodes a rule pattern may use

    Returns:
        Number of passes that changed at least one edge
    """
    passes = 0
    changed = True
    while changed:
        changed = False
        for rule in MEEK_RULES:
            changed |= rule(p, scope)
        if changed:
            passes += 1
    return passes


def apply_meek_rules(p: Leg, scope: AbstractSet[int]) -> Leg:
    """
    Fixpoint of Meek rules 1-4 restricted to ``scope``.

    Only undirected edges are ever oriented, so the result is monotone in
    ``p`` and applying it twice changes nothing. A rule demanding both
    orientations of one edge keeps the first and logs a warning.

    Args:
        p: LEG with an acyclic directed part
        scope: Nodes a rule pattern may use

    Returns:
        The closed LEG
    """
    builder = LegBuilder.from_leg(p)
    meek_closure(builder, scope)
    return builder.freeze()


def orient_colliders_in_place(
    p: LegBuilder, sepsets: SepsetCache, scope: AbstractSet[int]
) -> int:
    """
    Orient every in-scope unshielded triple ``a - b - c`` with b outside the
    recorded separating set of (a, c) as ``a -> b <- c``.

    Returns:
        Number of colliders oriented
    """
    count = 0
    for b in sorted(scope):
        around = sorted(u for u in p.neighbors(b) if u in scope)
        for i, a in enumerate(around):
            for c in around[i + 1 :]:
                if p.adjacent(a, c):
                    continue
                sepset = sepsets.separating_set(a, c)
                if sepset is None:
                    logger.debug(f"No separating set recorded for ({a}, {c})")
                    continue
                if b not in sepset:
                    p.orient(a, b)
                    p.orient(c, b)
                    count += 1
    return count


def orient_unshielded_colliders(
    p: Leg, sepsets: SepsetCache, scope: AbstractSet[int]
) -> Leg:
    """
    Orient unshielded colliders whose three nodes lie in ``scope``.

    Args:
        p: LEG holding a skeleton
        sepsets: Separating sets of nonadjacent pairs
        scope: Nodes eligible for orientation

    Returns:
        The LEG with colliders oriented; conflicting demands keep the first
        orientation and are logged
    """
    builder = LegBuilder.from_leg(p)
    orient_colliders_in_place(builder, sepsets, scope)
    return builder.freeze()
