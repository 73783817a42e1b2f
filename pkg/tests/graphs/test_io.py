"""Tests for the DAG and LEG text formats."""

import pytest

from local_cde_discovery.core.exceptions import GraphFormatError
from local_cde_discovery.graphs.io import (
    format_dag,
    format_leg,
    parse_dag,
    parse_leg,
    read_dag,
    read_leg,
    write_dag,
    write_leg,
)
from local_cde_discovery.local.leg_builder import build_true_leg


class TestDagFormat:
    def test_round_trip(self, mediator_dag, tmp_path):
        path = tmp_path / "mediator.dag"
        write_dag(path, mediator_dag)
        loaded = read_dag(path)
        assert loaded.edges == mediator_dag.edges
        assert parse_dag(format_dag(mediator_dag), mediator_dag.names) == mediator_dag

    def test_layout(self):
        text = "dag 3\n# a comment\n0 -> 2\n\n1 -> 2  # trailing\n"
        g = parse_dag(text)
        assert g.edges == {(0, 2), (1, 2)}
        assert format_dag(g) == "dag 3\n0 -> 2\n1 -> 2\n"

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "# only a comment\n",
            "graph 3\n0 -> 1\n",
            "dag 3\n0 -- 1\n",
            "dag 3\n0 -> \n",
            "dag 3\n0 -> 1\n1 -> 0\n",
            "dag 3\n0 -> 1\n1 -> 2\n2 -> 0\n",
            "dag 2\n0 -> 5\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            parse_dag(text)


class TestLegFormat:
    def test_round_trip(self, mediator_dag, tmp_path):
        leg = build_true_leg(mediator_dag, mediator_dag.node("Y"), 1)
        path = tmp_path / "mediator.leg"
        write_leg(path, leg)
        assert read_leg(path) == leg
        assert parse_leg(format_leg(leg), mediator_dag.names).names == leg.names

    def test_header_and_order(self):
        text = "leg 3 target=1 hop=2\n2 || 1\n0 -> 1\n"
        leg = parse_leg(text)
        assert leg.target == 1 and leg.hop == 2
        assert format_leg(leg) == "leg 3 target=1 hop=2\n0 -> 1\n1 || 2\n"

    @pytest.mark.parametrize(
        "text",
        [
            "leg 3 target=0\n",
            "leg 3 target=0 hop=1\n0 => 1\n",
            "leg 3 target=0 hop=1\n0 -- 1\n1 -- 0\n",
            "leg 3 target=0 hop=1\n0 -- 1\n0 -> 1\n",
            "leg 3 target=0 hop=1\n0 -> 1\n1 -> 2\n2 -> 0\n",
            "leg 2 target=0 hop=1\n0 -- 7\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            parse_leg(text)
