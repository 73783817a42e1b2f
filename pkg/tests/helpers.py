"""
Test helpers: reference implementations used only as cross-checks, and small
graph-building shortcuts.
"""

from itertools import combinations
from typing import AbstractSet, Dict, FrozenSet, Iterator, List, Sequence, Tuple

import networkx as nx

from local_cde_discovery.datagen.graphs import gen_er_dag
from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.leg import EdgeMark, Leg, MarkedEdge


def path_blocked(g: Dag, path: Sequence[int], z: AbstractSet[int]) -> bool:
    """Whether ``z`` blocks one skeleton path, by the textbook rules."""
    for i in range(1, len(path) - 1):
        prev, v, nxt = path[i - 1], path[i], path[i + 1]
        if g.has_edge(prev, v) and g.has_edge(nxt, v):
            if v not in z and not (g.descendants(v) & z):
                return True
        elif v in z:
            return True
    return False


def brute_force_d_separated(
    g: Dag, x: int, y: int, z: AbstractSet[int]
) -> bool:
    """d-separation by enumerating every simple skeleton path."""
    skeleton = g.skeleton_graph()
    return all(
        path_blocked(g, path, z) for path in nx.all_simple_paths(skeleton, x, y)
    )


def all_conditioning_sets(n: int, x: int, y: int) -> Iterator[FrozenSet[int]]:
    rest = [v for v in range(n) if v not in (x, y)]
    for size in range(len(rest) + 1):
        for combo in combinations(rest, size):
            yield frozenset(combo)


def random_dags(n_vars: int, seeds: Sequence[int]) -> List[Dag]:
    return [gen_er_dag(n_vars, seed) for seed in seeds]


def all_dags(n: int) -> Iterator[Dag]:
    """Every labelled DAG on ``n`` nodes."""
    pairs = list(combinations(range(n), 2))
    for code in range(3 ** len(pairs)):
        edges = []
        for a, b in pairs:
            code, state = divmod(code, 3)
            if state == 1:
                edges.append((a, b))
            elif state == 2:
                edges.append((b, a))
        graph = nx.DiGraph(edges)
        if nx.is_directed_acyclic_graph(graph):
            yield Dag.from_edges(n, edges)


def markov_class_key(g: Dag) -> Tuple[FrozenSet[FrozenSet[int]], FrozenSet]:
    return g.skeleton_pairs(), g.v_structures()


def marks_by_name(leg: Leg) -> Dict[str, str]:
    """Map ``"A-B"`` (names sorted for symmetric marks) to the mark token."""
    out: Dict[str, str] = {}
    for e in leg.edges:
        a, b = leg.names[e.a], leg.names[e.b]
        if e.mark is EdgeMark.DIRECTED:
            out[f"{a}->{b}"] = "->"
        else:
            a, b = sorted((a, b))
            out[f"{a}-{b}"] = e.mark.value
    return out


def named_leg(
    names: Sequence[str],
    target: str,
    hop: int,
    undirected: Sequence[Tuple[str, str]] = (),
    directed: Sequence[Tuple[str, str]] = (),
    double_bar: Sequence[Tuple[str, str]] = (),
) -> Leg:
    """Build a Leg from named edges."""
    index = {name: i for i, name in enumerate(names)}
    edges = []
    for pairs, mark in (
        (undirected, EdgeMark.UNDIRECTED),
        (directed, EdgeMark.DIRECTED),
        (double_bar, EdgeMark.DOUBLE_BAR),
    ):
        for a, b in pairs:
            i, j = index[a], index[b]
            if mark is not EdgeMark.DIRECTED and i > j:
                i, j = j, i
            edges.append(MarkedEdge(i, j, mark))
    return Leg(
        n=len(names),
        edges=frozenset(edges),
        target=index[target],
        hop=hop,
        names=tuple(names),
    )


def internal_edges(leg: Leg, hood: AbstractSet[int]) -> FrozenSet[MarkedEdge]:
    """Edges with both endpoints inside ``hood``."""
    return frozenset(e for e in leg.edges if e.a in hood and e.b in hood)
