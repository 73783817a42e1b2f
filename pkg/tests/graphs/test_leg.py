"""Tests for local essential graphs and their builder."""

import pytest

from local_cde_discovery.core.exceptions import GraphError, OrientationConflictError
from local_cde_discovery.graphs.leg import EdgeMark, Leg, LegBuilder, MarkedEdge
from tests.helpers import named_leg

NAMES = ("A", "B", "C", "D")


class TestLeg:
    def test_rejects_two_marks_on_one_pair(self):
        edges = frozenset(
            {
                MarkedEdge(0, 1, EdgeMark.UNDIRECTED),
                MarkedEdge(1, 0, EdgeMark.DIRECTED),
            }
        )
        with pytest.raises(GraphError):
            Leg(n=2, edges=edges)

    def test_rejects_non_canonical_symmetric_edge(self):
        with pytest.raises(GraphError):
            Leg(n=2, edges=frozenset({MarkedEdge(1, 0, EdgeMark.UNDIRECTED)}))

    def test_rejects_directed_cycle(self):
        edges = frozenset(
            MarkedEdge(a, b, EdgeMark.DIRECTED) for a, b in ((0, 1), (1, 2), (2, 0))
        )
        with pytest.raises(OrientationConflictError):
            Leg(n=3, edges=edges)

    def test_neighbor_queries(self):
        leg = named_leg(
            NAMES,
            "A",
            1,
            undirected=[("A", "B")],
            directed=[("C", "A")],
            double_bar=[("A", "D")],
        )
        a, b, c, d = range(4)
        assert leg.neighbors(a) == {b, c, d}
        assert leg.parents(a) == {c}
        assert leg.children(c) == {a}
        assert leg.undirected_neighbors(a) == {b}
        assert leg.double_bar_neighbors(a) == {d}
        assert leg.non_arrow_neighbors(a) == {b, d}
        assert leg.is_directed(c, a) and not leg.is_directed(a, c)
        assert leg.mark(d, a) is EdgeMark.DOUBLE_BAR

    def test_without_double_bars(self):
        leg = named_leg(NAMES, "A", 0, double_bar=[("A", "D")])
        assert leg.without_double_bars() == {MarkedEdge(0, 3, EdgeMark.UNDIRECTED)}

    def test_describe_in_output_order(self):
        leg = named_leg(NAMES, "A", 1, undirected=[("C", "D")], directed=[("B", "A")])
        assert leg.describe() == ["B -> A", "C -- D"]

    def test_neighborhood_uses_stored_hop(self):
        leg = named_leg(NAMES, "A", 1, undirected=[("A", "B"), ("B", "C")])
        assert leg.neighborhood() == {0, 1}

    def test_equality_ignores_names(self):
        first = Leg(n=2, edges=frozenset(), names=("P", "Q"))
        second = Leg(n=2, edges=frozenset())
        assert first == second


class TestLegBuilder:
    def _triangle(self):
        builder = LegBuilder(3)
        builder.add_undirected(0, 1)
        builder.add_undirected(1, 2)
        builder.add_undirected(0, 2)
        return builder

    def test_orient_and_freeze(self):
        builder = self._triangle()
        assert builder.orient(0, 1)
        leg = builder.freeze()
        assert leg.is_directed(0, 1)
        assert leg.mark(1, 2) is EdgeMark.UNDIRECTED

    def test_first_writer_wins(self):
        builder = self._triangle()
        builder.orient(0, 1)
        assert not builder.orient(1, 0)
        assert builder.is_directed(0, 1)
        assert builder.conflicts == [(1, 0)]

    def test_refuses_cycle(self):
        builder = self._triangle()
        builder.orient(0, 1)
        builder.orient(1, 2)
        assert not builder.orient(2, 0)
        assert builder.is_undirected(0, 2)

    def test_orient_missing_edge(self):
        builder = LegBuilder(3)
        with pytest.raises(GraphError):
            builder.orient(0, 1)

    def test_self_loop(self):
        with pytest.raises(GraphError):
            LegBuilder(2).add_undirected(1, 1)

    def test_double_bar_only_on_undirected(self):
        builder = self._triangle()
        builder.orient(0, 1)
        builder.set_double_bar(0, 1)
        builder.set_double_bar(1, 2)
        assert builder.mark(0, 1) is EdgeMark.DIRECTED
        assert builder.mark(1, 2) is EdgeMark.DOUBLE_BAR
        assert not builder.orient(1, 2)

    def test_remove(self):
        builder = self._triangle()
        builder.remove(0, 2)
        assert not builder.adjacent(0, 2)
        assert builder.neighbors(0) == {1}

    def test_restrict_to_pairs_touching(self):
        builder = LegBuilder(4)
        builder.add_undirected(0, 1)
        builder.add_undirected(2, 3)
        builder.restrict_to_pairs_touching({0})
        assert builder.adjacent(0, 1)
        assert not builder.adjacent(2, 3)

    def test_round_trip_through_leg(self):
        builder = self._triangle()
        builder.orient(2, 1)
        leg = builder.freeze()
        assert LegBuilder.from_leg(leg).freeze() == leg
