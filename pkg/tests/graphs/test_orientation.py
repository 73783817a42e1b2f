"""Tests for collider orientation and the Meek rules."""

from local_cde_discovery.ci.sepsets import SepsetCache
from local_cde_discovery.graphs.leg import EdgeMark
from local_cde_discovery.graphs.orientation import (
    apply_meek_rules,
    orient_unshielded_colliders,
)
from tests.helpers import named_leg

ALL = frozenset(range(4))


def _leg(**edges):
    return named_leg(("A", "B", "C", "D"), "A", 2, **edges)


class TestColliders:
    def test_orients_when_middle_not_in_sepset(self):
        sepsets = SepsetCache()
        sepsets.record_separated(0, 2, set())
        leg = orient_unshielded_colliders(
            _leg(undirected=[("A", "B"), ("B", "C")]), sepsets, ALL
        )
        assert leg.is_directed(0, 1) and leg.is_directed(2, 1)

    def test_keeps_when_middle_in_sepset(self):
        sepsets = SepsetCache()
        sepsets.record_separated(0, 2, {1})
        leg = orient_unshielded_colliders(
            _leg(undirected=[("A", "B"), ("B", "C")]), sepsets, ALL
        )
        assert leg.mark(0, 1) is EdgeMark.UNDIRECTED
        assert leg.mark(1, 2) is EdgeMark.UNDIRECTED

    def test_out_of_scope_triple_untouched(self):
        sepsets = SepsetCache()
        sepsets.record_separated(0, 2, set())
        leg = orient_unshielded_colliders(
            _leg(undirected=[("A", "B"), ("B", "C")]), sepsets, frozenset({0, 1})
        )
        assert leg.mark(0, 1) is EdgeMark.UNDIRECTED

    def test_missing_sepset_is_skipped(self):
        leg = orient_unshielded_colliders(
            _leg(undirected=[("A", "B"), ("B", "C")]), SepsetCache(), ALL
        )
        assert leg.mark(0, 1) is EdgeMark.UNDIRECTED


class TestMeekRules:
    def test_rule_one(self):
        leg = apply_meek_rules(
            _leg(directed=[("A", "B")], undirected=[("B", "C")]), ALL
        )
        assert leg.is_directed(1, 2)

    def test_rule_one_needs_scope(self):
        leg = apply_meek_rules(
            _leg(directed=[("A", "B")], undirected=[("B", "C")]), frozenset({0, 1})
        )
        assert leg.mark(1, 2) is EdgeMark.UNDIRECTED

    def test_rule_two(self):
        leg = apply_meek_rules(
            _leg(directed=[("A", "B"), ("B", "C")], undirected=[("A", "C")]), ALL
        )
        assert leg.is_directed(0, 2)

    def test_rule_three(self):
        leg = apply_meek_rules(
            _leg(
                undirected=[("A", "B"), ("A", "C"), ("A", "D")],
                directed=[("B", "D"), ("C", "D")],
            ),
            ALL,
        )
        assert leg.is_directed(0, 3)
        assert leg.mark(0, 1) is EdgeMark.UNDIRECTED

    def test_rule_four(self):
        leg = apply_meek_rules(
            _leg(
                undirected=[("A", "B"), ("A", "C"), ("A", "D")],
                directed=[("C", "D"), ("D", "B")],
            ),
            ALL,
        )
        assert leg.is_directed(0, 1)

    def test_triangle_unchanged(self):
        leg = _leg(undirected=[("A", "B"), ("B", "C"), ("A", "C")])
        assert apply_meek_rules(leg, ALL) == leg

    def test_parent_forces_next_edge(self):
        # Z5 -> Z3 - X with Z5, X nonadjacent
        leg = named_leg(
            ("X", "Z3", "Z5"), "X", 2, directed=[("Z5", "Z3")], undirected=[("Z3", "X")]
        )
        closed = apply_meek_rules(leg, frozenset(range(3)))
        assert closed.is_directed(1, 0)

    def test_idempotent_and_monotone(self):
        leg = _leg(
            directed=[("A", "B")], undirected=[("B", "C"), ("C", "D"), ("B", "D")]
        )
        once = apply_meek_rules(leg, ALL)
        assert apply_meek_rules(once, ALL) == once
        assert {frozenset((e.a, e.b)) for e in once.edges} == {
            frozenset((e.a, e.b)) for e in leg.edges
        }
        arrows = [e for e in leg.edges if e.mark is EdgeMark.DIRECTED]
        assert all(once.is_directed(e.a, e.b) for e in arrows)
        assert once.is_directed(1, 2) and once.is_directed(1, 3)

    def test_double_bar_is_not_an_arrow(self):
        leg = _leg(double_bar=[("A", "B")], undirected=[("B", "C")])
        closed = apply_meek_rules(leg, ALL)
        assert closed.mark(1, 2) is EdgeMark.UNDIRECTED
