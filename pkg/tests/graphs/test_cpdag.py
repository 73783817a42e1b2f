"""Tests for CPDAG construction."""

from collections import defaultdict

import pytest

from local_cde_discovery.graphs.cpdag import dag_to_cpdag
from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.leg import EdgeMark
from tests.helpers import all_dags, marks_by_name, markov_class_key


class TestSmallPatterns:
    def test_chain_is_undirected(self):
        g = Dag.from_named_edges("ABC", [("A", "B"), ("B", "C")])
        cpdag = dag_to_cpdag(g)
        assert marks_by_name(cpdag) == {"A-B": "--", "B-C": "--"}

    def test_collider_is_directed(self):
        g = Dag.from_named_edges("ABC", [("A", "B"), ("C", "B")])
        assert marks_by_name(dag_to_cpdag(g)) == {"A->B": "->", "C->B": "->"}

    def test_collider_propagates(self):
        g = Dag.from_named_edges("ABCD", [("A", "B"), ("C", "B"), ("B", "D")])
        assert dag_to_cpdag(g).is_directed(1, 3)

    def test_whole_graph_hop(self, mediator_dag):
        cpdag = dag_to_cpdag(mediator_dag)
        assert cpdag.hop == mediator_dag.n
        assert cpdag.target == 0
        assert not any(e.mark is EdgeMark.DOUBLE_BAR for e in cpdag.edges)

    def test_boundary_example(self, boundary_dag):
        assert marks_by_name(dag_to_cpdag(boundary_dag)) == {
            "X-Y": "--",
            "D1-X": "--",
            "D1-Y": "--",
            "W1-Z": "--",
            "X->A1": "->",
            "W1->A1": "->",
            "Y->D2": "->",
            "A1->D2": "->",
            "D2->A2": "->",
            "A2->W2": "->",
            "Z->W2": "->",
        }


class TestMarkovEquivalence:
    """Every member of an equivalence class yields the same essential graph."""

    def test_enumeration_sizes(self):
        assert sum(1 for _ in all_dags(3)) == 25

    @pytest.mark.parametrize("n_vars", [3, 4])
    def test_classes_share_cpdag(self, n_vars):
        classes = defaultdict(list)
        for g in all_dags(n_vars):
            classes[markov_class_key(g)].append(g)
        for members in classes.values():
            cpdag = dag_to_cpdag(members[0])
            for g in members[1:]:
                assert dag_to_cpdag(g) == cpdag

    @pytest.mark.parametrize("n_vars", [3, 4])
    def test_marks_match_class(self, n_vars):
        classes = defaultdict(list)
        for g in all_dags(n_vars):
            classes[markov_class_key(g)].append(g)
        for members in classes.values():
            cpdag = dag_to_cpdag(members[0])
            assert cpdag.skeleton_pairs() == members[0].skeleton_pairs()
            for e in cpdag.edges:
                oriented = {(a, b) for g in members for a, b in g.edges}
                if e.mark is EdgeMark.DIRECTED:
                    assert all(g.has_edge(e.a, e.b) for g in members)
                else:
                    assert (e.a, e.b) in oriented and (e.b, e.a) in oriented
