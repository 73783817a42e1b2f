# Location: local_cde_discovery/discovery/pc.py
"""
PC Baseline

Global stable PC: level-wise skeleton pruning over adjacency snapshots,
unshielded colliders, then Meek closure over every node.
"""

import logging
from typing import Dict, FrozenSet, Optional

from local_cde_discovery.ci.counted import CountedCi
from local_cde_discovery.ci.sepsets import SepsetCache
from local_cde_discovery.graphs.leg import Leg, LegBuilder
from local_cde_discovery.graphs.orientation import (
    meek_closure,
    orient_colliders_in_place,
)
from local_cde_discovery.interfaces.ci_source import CiSource
from local_cde_discovery.utils.subsets import subsets_of_size

logger = logging.getLogger(__name__)


def pc_baseline(
    ci: CiSource, n_vars: int, sepsets: Optional[SepsetCache] = None
) -> Leg:
    """
    Run PC over all variables.

    Args:
        ci: CI source
        n_vars: Number of variables
        sepsets: Optional cache receiving the separating sets found

    Returns:
        The estimated CPDAG as a Leg with hop = n_vars

    Raises:
        ValueError: If n_vars disagrees with the source
    """
    if n_vars != ci.n_vars:
        raise ValueError(f"n_vars={n_vars} but the CI source has {ci.n_vars}")
    sepsets = sepsets if sepsets is not None else SepsetCache()
    nodes = range(n_vars)
    builder = LegBuilder(n_vars, target=0, hop=n_vars, names=ci.names)
    for a in nodes:
        for b in range(a + 1, n_vars):
            builder.add_undirected(a, b)

    s = 0
    while any(len(builder.neighbors(v)) - 1 >= s for v in nodes):
        snapshot: Dict[int, FrozenSet[int]] = {v: builder.neighbors(v) for v in nodes}
        for a in nodes:
            for b in sorted(builder.neighbors(a)):
                pool = snapshot[a] - {b}
                if len(pool) < s:
                    continue
                for z in subsets_of_size(pool, s):
                    if ci.independent(a, b, z):
                        sepsets.record_separated(a, b, z)
                        builder.remove(a, b)
                        break
        s += 1

    everything = frozenset(nodes)
    orient_colliders_in_place(builder, sepsets, everything)
    meek_closure(builder, everything)

    if isinstance(ci, CountedCi):
        logger.info(f"PC finished at level {s} after {ci.count} CI tests")
    return builder.freeze()
