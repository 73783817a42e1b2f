# Location: local_cde_discovery/discovery/bounds.py
"""
CI-Test Bound

Worst-case number of CI tests LocPC performs at hop h, in terms of the
largest neighborhood size and the largest descendant-inducing-neighbor count.
"""

import logging
from math import comb
from typing import Iterable, Optional, Tuple

from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.local.adjacency import (
    SeparationTest,
    descendant_inducing_neighbors,
    memoized_dsep,
)

logger = logging.getLogger(__name__)


def ci_test_bound(n: int, k_d: int, k_i: int, h: int) -> int:
    """
    Upper bound on LocPC's CI tests.

    With k_l = k_d + k_i, the bound is
    ``(1 + k_l * sum(k_d**i for i < h)) * (n - 1) * sum(C(n - 2, s) for s <= k_l)``.

    Args:
        n: Number of variables, at least 3
        k_d: Largest neighbor count in the neighborhood, at least 1
        k_i: Largest descendant-inducing-neighbor count, at least 0
        h: Hop count, at least 0

    Returns:
        The bound as an exact integer

    Raises:
        ValueError: If an argument is out of range
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if k_d < 1:
        raise ValueError(f"k_d must be >= 1, got {k_d}")
    if k_i < 0 or h < 0:
        raise ValueError(f"k_i and h must be non-negative, got {k_i} and {h}")
    k_l = k_d + k_i
    frontier = 1 + k_l * sum(k_d**i for i in range(h))
    per_node = (n - 1) * sum(comb(n - 2, s) for s in range(k_l + 1))
    return frontier * per_node


def degree_parameters(
    g: Dag, nodes: Iterable[int], separated: Optional[SeparationTest] = None
) -> Tuple[int, int]:
    """
    The ``(k_d, k_i)`` pair of ``g`` over ``nodes``.

    k_d is the largest neighbor count, at least 1; k_i is the largest number
    of descendant inducing neighbors. A separating set LocPC finds from one
    of ``nodes`` has at most k_d + k_i members.

    Args:
        g: The DAG
        nodes: Nodes to take the maxima over
        separated: Optional memoized d-separation test for ``g``

    Returns:
        The pair (k_d, k_i)
    """
    sep = separated or memoized_dsep(g)
    members = sorted(set(nodes))
    k_d = max([1, *(len(g.neighbors(v)) for v in members)])
    k_i = max(
        [0, *(len(descendant_inducing_neighbors(g, v, sep)) for v in members)]
    )
    logger.debug(f"Degree parameters over {len(members)} nodes: k_d={k_d}, k_i={k_i}")
    return k_d, k_i
