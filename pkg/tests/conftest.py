"""
Shared fixtures: the worked-example DAGs used as golden inputs.
"""

import os

import pytest

from local_cde_discovery.graphs.dag import Dag

RUN_SLOW = os.environ.get("LOCAL_CDE_RUN_SLOW") == "1"

MEDIATOR_NAMES = ("X", "Y", "M", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7")
MEDIATOR_EDGES = (
    ("X", "Y"),
    ("X", "M"),
    ("M", "Y"),
    ("Y", "Z1"),
    ("Z2", "X"),
    ("Z2", "Y"),
    ("Z2", "Z3"),
    ("Z3", "X"),
    ("Z3", "Z1"),
    ("Z4", "Z1"),
    ("Z5", "Z3"),
    ("Z6", "Z3"),
    ("Z7", "Z4"),
)

BOUNDARY_NAMES = ("X", "Y", "D1", "D2", "A1", "A2", "W1", "W2", "Z")
BOUNDARY_EDGES = (
    ("X", "Y"),
    ("X", "D1"),
    ("D1", "Y"),
    ("X", "A1"),
    ("Y", "D2"),
    ("D2", "A2"),
    ("W1", "A1"),
    ("A2", "W2"),
    ("W1", "Z"),
    ("Z", "W2"),
    ("A1", "D2"),
)

SPURIOUS_NAMES = ("X", "Y", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7")
SPURIOUS_EDGES = (
    ("X", "Y"),
    ("Y", "Z1"),
    ("Z2", "X"),
    ("Z3", "X"),
    ("Z2", "Z5"),
    ("Z1", "Z4"),
    ("Z3", "Z1"),
    ("Z3", "Z4"),
    ("Z3", "Z6"),
    ("Z3", "Z5"),
    ("Z7", "Z4"),
    ("Z5", "Z6"),
)


def pytest_collection_modifyitems(config, items):
    if RUN_SLOW:
        return
    skip_slow = pytest.mark.skip(reason="set LOCAL_CDE_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def mediator_dag() -> Dag:
    """Y with parents X, M, Z2 and a mediator X -> M -> Y."""
    return Dag.from_named_edges(MEDIATOR_NAMES, MEDIATOR_EDGES)


@pytest.fixture
def boundary_dag() -> Dag:
    """X - Y stays unresolved in every equivalent DAG."""
    return Dag.from_named_edges(BOUNDARY_NAMES, BOUNDARY_EDGES)


@pytest.fixture
def spurious_dag() -> Dag:
    """Y keeps a spurious neighbor Z4 at hop 0."""
    return Dag.from_named_edges(SPURIOUS_NAMES, SPURIOUS_EDGES)


@pytest.fixture
def dip_small_dag() -> Dag:
    """D -> A <- C -> B with A -> B: B is a spurious neighbor of D."""
    return Dag.from_named_edges(
        ("D", "A", "B", "C"),
        (("D", "A"), ("A", "B"), ("C", "B"), ("C", "A")),
    )


@pytest.fixture
def dip_wide_dag() -> Dag:
    """Fifteen nodes around D with several inducing paths, some of them DIPs."""
    names = tuple("DABCEFGHIJKLMNO")
    edges = (
        ("D", "A"),
        ("A", "B"),
        ("B", "E"),
        ("E", "F"),
        ("C", "A"),
        ("C", "B"),
        ("G", "E"),
        ("G", "F"),
        ("D", "H"),
        ("H", "I"),
        ("K", "I"),
        ("K", "J"),
        ("I", "J"),
        ("M", "L"),
        ("D", "L"),
        ("M", "N"),
        ("O", "N"),
        ("L", "O"),
        ("D", "E"),
    )
    return Dag.from_named_edges(names, edges)


@pytest.fixture
def dip_removed_dag() -> Dag:
    """B is descendant inducing for D but pruned before it turns spurious."""
    return Dag.from_named_edges(
        ("D", "A", "B", "C", "E", "F"),
        (
            ("D", "A"),
            ("A", "B"),
            ("C", "B"),
            ("C", "A"),
            ("F", "C"),
            ("D", "F"),
            ("E", "D"),
            ("E", "C"),
        ),
    )
