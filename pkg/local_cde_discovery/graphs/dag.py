# Location: local_cde_discovery/graphs/dag.py
"""
Directed Acyclic Graphs

This module defines the immutable DAG used as ground truth for oracles and
simulation, plus the neighborhood queries shared with local essential graphs.
"""

import logging
from dataclasses import dataclass, field
from typing import (
    FrozenSet,
    Iterable,
    List,
    Optional,
    Protocol,
    Sequence,
    Set,
    Tuple,
    Union,
)

import networkx as nx

from local_cde_discovery.core.exceptions import CyclicGraphError, GraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class SkeletonLike(Protocol):
    def skeleton_graph(self) -> nx.Graph: ...


def default_names(n: int) -> Tuple[str, ...]:
    """Display names used when a graph is built from indices only."""
    return tuple(str(i) for i in range(n))


def resolve_node(names: Sequence[str], key: Union[str, int]) -> int:
    """
    Resolve a node given by display name or by index.

    Args:
        names: Display names, position = index
        key: A display name, an index, or an index written as text

    Returns:
        The node index

    Raises:
        GraphError: If the key names no node
    """
    if isinstance(key, int):
        if 0 <= key < len(names):
            return key
        raise GraphError(f"Node index {key} out of range for {len(names)} nodes")
    if key in names:
        return names.index(key)
    if key.isdigit() and int(key) < len(names):
        return int(key)
    raise GraphError(f"Unknown node: {key}")


@dataclass(frozen=True)
class Dag:
    """
    Immutable directed acyclic graph over nodes ``0..n-1``.

    Acyclicity is checked at construction; derived adjacency structures are
    computed once and shared by every query.
    """

    n: int
    edges: FrozenSet[Edge]
    names: Tuple[str, ...] = ()

    _parents: Tuple[FrozenSet[int], ...] = field(
        init=False, repr=False, compare=False
    )
    _children: Tuple[FrozenSet[int], ...] = field(
        init=False, repr=False, compare=False
    )
    _graph: nx.DiGraph = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"Node count must be non-negative, got {self.n}")
        names = self.names or default_names(self.n)
        if len(names) != self.n or len(set(names)) != self.n:
            raise GraphError("Node names must be unique, one per node")
        object.__setattr__(self, "names", tuple(names))

        parents: List[Set[int]] = [set() for _ in range(self.n)]
        children: List[Set[int]] = [set() for _ in range(self.n)]
        for tail, head in self.edges:
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise GraphError(f"Edge {tail}->{head} out of range for n={self.n}")
            if tail == head:
                raise GraphError(f"Self-loop on node {tail}")
            if (head, tail) in self.edges:
                raise GraphError(f"Edge {tail}-{head} present in both directions")
            parents[head].add(tail)
            children[tail].add(head)

        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        if not nx.is_directed_acyclic_graph(graph):
            raise CyclicGraphError(
                f"Edge set has a directed cycle: {sorted(self.edges)}"
            )

        object.__setattr__(self, "_parents", tuple(frozenset(p) for p in parents))
        object.__setattr__(self, "_children", tuple(frozenset(c) for c in children))
        object.__setattr__(self, "_graph", graph)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Edge], names: Optional[Sequence[str]] = None
    ) -> "Dag":
        """
        Build a DAG from index pairs.

        Args:
            n: Node count
            edges: (tail, head) pairs; duplicates are rejected
            names: Optional display names

        Returns:
            The DAG

        Raises:
            GraphError: On duplicates, self-loops or bad indices
            CyclicGraphError: If the edges form a cycle
        """
        edge_list = [(int(a), int(b)) for a, b in edges]
        if len(set(edge_list)) != len(edge_list):
            raise GraphError("Duplicate edge in edge list")
        return cls(n=n, edges=frozenset(edge_list), names=tuple(names or ()))

    @classmethod
    def from_named_edges(
        cls, names: Sequence[str], edges: Iterable[Tuple[str, str]]
    ) -> "Dag":
        """Build a DAG from (tail, head) display-name pairs."""
        index = {name: i for i, name in enumerate(names)}
        try:
            pairs = [(index[a], index[b]) for a, b in edges]
        except KeyError as e:
            raise GraphError(f"Unknown node name {e}") from e
        return cls.from_edges(len(names), pairs, names)

    @property
    def graph(self) -> nx.DiGraph:
        """The networkx view of this DAG. Treat it as read-only."""
        return self._graph

    def node(self, key: Union[str, int]) -> int:
        """Resolve a node by display name or index."""
        return resolve_node(self.names, key)

    def label(self, v: int) -> str:
        """Display name of node ``v``."""
        return self.names[v]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"Node {v} out of range for n={self.n}")

    def has_edge(self, tail: int, head: int) -> bool:
        return (tail, head) in self.edges

    def adjacent(self, a: int, b: int) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    def parents(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return self._parents[v]

    def children(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return self._children[v]

    def neighbors(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return self._parents[v] | self._children[v]

    def descendants(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return frozenset(nx.descendants(self._graph, v))

    def ancestors(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return frozenset(nx.ancestors(self._graph, v))

    def topological_order(self) -> List[int]:
        """Deterministic topological order (smallest index first among ties)."""
        return list(nx.lexicographical_topological_sort(self._graph))

    def skeleton_graph(self) -> nx.Graph:
        """Undirected skeleton as a fresh networkx graph."""
        return self._graph.to_undirected(as_view=False)

    def skeleton_pairs(self) -> FrozenSet[FrozenSet[int]]:
        """Unordered adjacent pairs."""
        return frozenset(frozenset(e) for e in self.edges)

    def v_structures(self) -> FrozenSet[Tuple[int, int, int]]:
        """
        Unshielded colliders ``a -> b <- c`` as ``(a, b, c)`` with ``a < c``.
        """
        found: Set[Tuple[int, int, int]] = set()
        for b in range(self.n):
            pas = sorted(self._parents[b])
            for i, a in enumerate(pas):
                for c in pas[i + 1 :]:
                    if not self.adjacent(a, c):
                        found.add((a, b, c))
        return frozenset(found)

    def max_degree(self) -> int:
        """Largest number of neighbors of any node (0 for an empty graph)."""
        return max((len(self.neighbors(v)) for v in range(self.n)), default=0)


def parents(g: Dag, v: int) -> FrozenSet[int]:
    """
    Parents of ``v`` in ``g``.

    Args:
        g: The DAG
        v: Node index

    Returns:
        The exact in-neighbor set
    """
    return g.parents(v)


def descendants(g: Dag, v: int) -> FrozenSet[int]:
    """
    Nodes reachable from ``v`` by a directed path, excluding ``v``.

    Args:
        g: The DAG
        v: Node index

    Returns:
        The descendant set
    """
    return g.descendants(v)


def hop_neighborhood(skeleton: "SkeletonLike", y: int, h: int) -> FrozenSet[int]:
    """
    Nodes within undirected shortest-path distance ``h`` of ``y``.

    Marks and directions are ignored; ``y`` itself is always included.

    Args:
        skeleton: A Dag or Leg (anything exposing ``skeleton_graph()``)
        y: Center node
        h: Hop count, h >= 0

    Returns:
        The h-hop neighborhood of ``y``

    Raises:
        GraphError: If h is negative
    """
    if h < 0:
        raise GraphError(f"Hop count must be non-negative, got {h}")
    lengths = nx.single_source_shortest_path_length(
        skeleton.skeleton_graph(), y, cutoff=h
    )
    return frozenset(lengths)
