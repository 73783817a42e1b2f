# Location: local_cde_discovery/graphs/leg.py
"""
Local Essential Graphs

This module defines the partially directed graph returned by local discovery:
edges carry an undirected, directed or double-bar mark. ``Leg`` is immutable;
``LegBuilder`` is the exclusively held mutable form used while orienting.
A CPDAG is a ``Leg`` whose hop covers the whole graph and has no double bars.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

import networkx as nx

from local_cde_discovery.core.exceptions import GraphError, OrientationConflictError
from local_cde_discovery.graphs.dag import default_names, hop_neighborhood, resolve_node

logger = logging.getLogger(__name__)


class EdgeMark(enum.Enum):
    """Enumeration of LEG edge marks, valued by their text token."""

    UNDIRECTED = "--"
    DIRECTED = "->"
    DOUBLE_BAR = "||"


class MarkedEdge(NamedTuple):
    """
    One stored edge.

    Directed edges read ``a -> b``; symmetric marks are stored with ``a < b``.
    """

    a: int
    b: int
    mark: EdgeMark


def _canonical(a: int, b: int, mark: EdgeMark) -> MarkedEdge:
    if mark is EdgeMark.DIRECTED or a < b:
        return MarkedEdge(a, b, mark)
    return MarkedEdge(b, a, mark)


@dataclass(frozen=True)
class Leg:
    """Immutable partially directed graph around ``target`` at ``hop``."""

    n: int
    edges: FrozenSet[MarkedEdge]
    target: int = 0
    hop: int = 0
    names: Tuple[str, ...] = field(default=(), compare=False)

    _by_pair: Dict[FrozenSet[int], MarkedEdge] = field(
        init=False, repr=False, compare=False
    )
    _adj: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        names = self.names or default_names(self.n)
        if len(names) != self.n:
            raise GraphError("Node names must be one per node")
        object.__setattr__(self, "names", tuple(names))

        by_pair: Dict[FrozenSet[int], MarkedEdge] = {}
        adj: List[Set[int]] = [set() for _ in range(self.n)]
        for edge in self.edges:
            a, b, mark = edge
            if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
                raise GraphError(f"Invalid edge {a} {mark.value} {b}")
            if edge != _canonical(a, b, mark):
                raise GraphError(f"Symmetric edge {a} {mark.value} {b} not canonical")
            pair = frozenset((a, b))
            if pair in by_pair:
                raise GraphError(f"More than one mark between {a} and {b}")
            by_pair[pair] = edge
            adj[a].add(b)
            adj[b].add(a)

        directed = nx.DiGraph()
        directed.add_edges_from(
            (e.a, e.b) for e in self.edges if e.mark is EdgeMark.DIRECTED
        )
        if not nx.is_directed_acyclic_graph(directed):
            raise OrientationConflictError("Directed edges of the LEG form a cycle")

        object.__setattr__(self, "_by_pair", by_pair)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    def node(self, key: Union[str, int]) -> int:
        """Resolve a node by display name or index."""
        return resolve_node(self.names, key)

    def edge_between(self, a: int, b: int) -> Optional[MarkedEdge]:
        return self._by_pair.get(frozenset((a, b)))

    def mark(self, a: int, b: int) -> Optional[EdgeMark]:
        """Mark on the edge between ``a`` and ``b`` regardless of direction."""
        edge = self.edge_between(a, b)
        return edge.mark if edge else None

    def adjacent(self, a: int, b: int) -> bool:
        return frozenset((a, b)) in self._by_pair

    def is_directed(self, tail: int, head: int) -> bool:
        """True iff the LEG holds ``tail -> head``."""
        edge = self.edge_between(tail, head)
        return bool(edge and edge.mark is EdgeMark.DIRECTED and edge.a == tail)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def parents(self, v: int) -> FrozenSet[int]:
        return frozenset(u for u in self._adj[v] if self.is_directed(u, v))

    def children(self, v: int) -> FrozenSet[int]:
        return frozenset(u for u in self._adj[v] if self.is_directed(v, u))

    def undirected_neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(
            u for u in self._adj[v] if self.mark(u, v) is EdgeMark.UNDIRECTED
        )

    def double_bar_neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(
            u for u in self._adj[v] if self.mark(u, v) is EdgeMark.DOUBLE_BAR
        )

    def non_arrow_neighbors(self, v: int) -> FrozenSet[int]:
        """Neighbors joined by an undirected or double-bar mark."""
        return frozenset(
            u for u in self._adj[v] if self.mark(u, v) is not EdgeMark.DIRECTED
        )

    def skeleton_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((e.a, e.b) for e in self.edges)
        return graph

    def skeleton_pairs(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(self._by_pair)

    def neighborhood(self) -> FrozenSet[int]:
        """The hop neighborhood of the target on this LEG's skeleton."""
        return hop_neighborhood(self, self.target, self.hop)

    def sorted_edges(self) -> List[MarkedEdge]:
        """Edges in output order: by smaller endpoint, then larger endpoint."""
        return sorted(self.edges, key=lambda e: (min(e.a, e.b), max(e.a, e.b)))

    def without_double_bars(self) -> FrozenSet[MarkedEdge]:
        """Edge set with every double-bar mark read as undirected."""
        return frozenset(
            _canonical(e.a, e.b, EdgeMark.UNDIRECTED)
            if e.mark is EdgeMark.DOUBLE_BAR
            else e
            for e in self.edges
        )

    def describe(self) -> List[str]:
        """Edges as ``name mark name`` strings, in output order."""
        return [
            f"{self.names[e.a]} {e.mark.value} {self.names[e.b]}"
            for e in self.sorted_edges()
        ]


class LegBuilder:
    """
    Mutable LEG under construction.

    Orientation is first-writer-wins: an edge already directed, or marked with
    a double bar, is never re-marked, and an orientation that would close a
    directed cycle is refused. Refusals are logged and kept in ``conflicts``.
    """

    def __init__(
        self,
        n: int,
        target: int = 0,
        hop: int = 0,
        names: Optional[Sequence[str]] = None,
    ):
        self.n = n
        self.target = target
        self.hop = hop
        self.names = tuple(names or default_names(n))
        self.conflicts: List[Tuple[int, int]] = []
        self._marks: Dict[FrozenSet[int], MarkedEdge] = {}
        self._adj: List[Set[int]] = [set() for _ in range(n)]

    @classmethod
    def from_leg(cls, leg: Leg) -> "LegBuilder":
        builder = cls(leg.n, leg.target, leg.hop, leg.names)
        for edge in leg.edges:
            builder._put(edge)
        return builder

    def _put(self, edge: MarkedEdge) -> None:
        self._marks[frozenset((edge.a, edge.b))] = edge
        self._adj[edge.a].add(edge.b)
        self._adj[edge.b].add(edge.a)

    def add_undirected(self, a: int, b: int) -> None:
        """Add ``a -- b`` unless the pair already carries an edge."""
        if a == b:
            raise GraphError(f"Self-loop on node {a}")
        if frozenset((a, b)) not in self._marks:
            self._put(_canonical(a, b, EdgeMark.UNDIRECTED))

    def remove(self, a: int, b: int) -> None:
        if self._marks.pop(frozenset((a, b)), None) is not None:
            self._adj[a].discard(b)
            self._adj[b].discard(a)

    def adjacent(self, a: int, b: int) -> bool:
        return frozenset((a, b)) in self._marks

    def mark(self, a: int, b: int) -> Optional[EdgeMark]:
        edge = self._marks.get(frozenset((a, b)))
        return edge.mark if edge else None

    def is_directed(self, tail: int, head: int) -> bool:
        edge = self._marks.get(frozenset((tail, head)))
        return bool(edge and edge.mark is EdgeMark.DIRECTED and edge.a == tail)

    def is_undirected(self, a: int, b: int) -> bool:
        return self.mark(a, b) is EdgeMark.UNDIRECTED

    def neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(self._adj[v])

    def parents(self, v: int) -> List[int]:
        return sorted(u for u in self._adj[v] if self.is_directed(u, v))

    def undirected_neighbors(self, v: int) -> List[int]:
        return sorted(u for u in self._adj[v] if self.is_undirected(u, v))

    def undirected_pairs(self) -> List[Tuple[int, int]]:
        return sorted(
            (e.a, e.b) for e in self._marks.values() if e.mark is EdgeMark.UNDIRECTED
        )

    def _reaches(self, source: int, goal: int) -> bool:
        """Directed path ``source ~> goal`` over current arrows."""
        stack, seen = [source], {source}
        while stack:
            u = stack.pop()
            if u == goal:
                return True
            for w in self._adj[u]:
                if w not in seen and self.is_directed(u, w):
                    seen.add(w)
                    stack.append(w)
        return False

    def orient(self, tail: int, head: int) -> bool:
        """
        Mark ``tail -> head``.

        Args:
            tail: Arrow tail
            head: Arrow head

        Returns:
            True if the edge now reads ``tail -> head``

        Raises:
            GraphError: If the two nodes are not adjacent
        """
        edge = self._marks.get(frozenset((tail, head)))
        if edge is None:
            raise GraphError(f"Cannot orient missing edge {tail} - {head}")
        if edge.mark is EdgeMark.DIRECTED:
            if edge.a == tail:
                return True
            self._conflict(tail, head, "opposite arrow already present")
            return False
        if edge.mark is EdgeMark.DOUBLE_BAR:
            self._conflict(tail, head, "edge carries a double bar")
            return False
        if self._reaches(head, tail):
            self._conflict(tail, head, "orientation would close a directed cycle")
            return False
        self._put(MarkedEdge(tail, head, EdgeMark.DIRECTED))
        return True

    def set_double_bar(self, a: int, b: int) -> None:
        """Mark an undirected edge ``a || b``; other marks are left alone."""
        if self.is_undirected(a, b):
            self._put(_canonical(a, b, EdgeMark.DOUBLE_BAR))

    def _conflict(self, tail: int, head: int, reason: str) -> None:
        self.conflicts.append((tail, head))
        logger.warning(
            f"Orientation conflict on {self.names[tail]} -> {self.names[head]}: "
            f"{reason}; keeping the existing mark"
        )

    def restrict_to_pairs_touching(self, nodes: Iterable[int]) -> None:
        """Drop every edge with no endpoint in ``nodes``."""
        keep = set(nodes)
        for pair in list(self._marks):
            if not pair & keep:
                a, b = tuple(pair)
                self.remove(a, b)

    def freeze(self) -> Leg:
        return Leg(
            n=self.n,
            edges=frozenset(self._marks.values()),
            target=self.target,
            hop=self.hop,
            names=self.names,
        )
