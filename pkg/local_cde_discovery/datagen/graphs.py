# Location: local_cde_discovery/datagen/graphs.py
"""
Random Graphs

Erdős–Rényi DAGs and benchmark instances whose controlled direct effect is
known to be identifiable or not.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Union

import numpy as np

from local_cde_discovery.core.exceptions import RetryExhaustedError
from local_cde_discovery.datagen.scm import ScmKind, ScmSpec, SeedLike, random_scm
from local_cde_discovery.graphs.cpdag import dag_to_cpdag
from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.local.noc import cde_identifiable_from_graph

logger = logging.getLogger(__name__)

DEFAULT_MAX_DRAWS = 10000


@dataclass(frozen=True)
class BenchInstance:
    """A model with a treatment-target pair and its ground-truth verdict."""

    scm: ScmSpec
    treatment: int
    target: int
    identifiable: bool
    draws: int = 1

    def to_dict(self) -> Dict[str, Any]:
        names = self.scm.dag.names
        return {
            "treatment": names[self.treatment],
            "target": names[self.target],
            "identifiable": self.identifiable,
            "draws": self.draws,
            **self.scm.to_dict(),
        }


def edge_probability(n_vars: int) -> float:
    """ER edge probability giving an expected degree of two, clamped to 1."""
    return min(1.0, 2.0 / (n_vars - 1))


def gen_er_dag(n_vars: int, seed: SeedLike) -> Dag:
    """
    Erdős–Rényi DAG oriented along a uniformly random node order.

    Args:
        n_vars: Node count, at least 2
        seed: Seed, seed sequence or generator

    Returns:
        The DAG

    Raises:
        ValueError: If n_vars < 2
    """
    if n_vars < 2:
        raise ValueError(f"n_vars must be >= 2, got {n_vars}")
    rng = np.random.default_rng(seed)
    p = edge_probability(n_vars)
    upper = np.triu(rng.random((n_vars, n_vars)) < p, k=1)
    rank = np.empty(n_vars, dtype=np.int64)
    rank[rng.permutation(n_vars)] = np.arange(n_vars)

    edges = []
    for i, j in zip(*np.nonzero(upper)):
        a, b = int(i), int(j)
        edges.append((a, b) if rank[a] < rank[b] else (b, a))
    return Dag.from_edges(n_vars, edges)


def gen_instance(
    n_vars: int,
    want_identifiable: bool,
    seed: Union[int, np.random.SeedSequence],
    kind: ScmKind = ScmKind.LINEAR_GAUSSIAN,
    max_draws: int = DEFAULT_MAX_DRAWS,
) -> BenchInstance:
    """
    Draw DAGs until one has an edge X -> Y with the wanted verdict.

    Targets are scanned by index and treatments over the target's parents by
    index; the first match wins.

    Args:
        n_vars: Node count, at least 3
        want_identifiable: Whether the CDE of X on Y must be identifiable
        seed: Seed or seed sequence
        kind: Equation form of the model
        max_draws: Draw cap

    Returns:
        The instance

    Raises:
        ValueError: If n_vars < 3
        RetryExhaustedError: If no draw qualifies within the cap
    """
    if n_vars < 3:
        raise ValueError(f"n_vars must be >= 3, got {n_vars}")
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    graph_seq, model_seq = seed.spawn(2)
    graph_rng = np.random.default_rng(graph_seq)

    for draw in range(1, max_draws + 1):
        g = gen_er_dag(n_vars, graph_rng)
        cpdag = dag_to_cpdag(g)
        for y in range(n_vars):
            parents = sorted(g.parents(y))
            if not parents:
                continue
            if cde_identifiable_from_graph(cpdag, y) == want_identifiable:
                logger.debug(f"Instance found after {draw} draws: {parents[0]} -> {y}")
                return BenchInstance(
                    scm=random_scm(g, kind, model_seq),
                    treatment=parents[0],
                    target=y,
                    identifiable=want_identifiable,
                    draws=draw,
                )

    raise RetryExhaustedError(
        f"No {'identifiable' if want_identifiable else 'non-identifiable'} "
        f"instance with {n_vars} nodes in {max_draws} draws"
    )

