# Location: local_cde_discovery/ci/oracle.py
"""
d-Separation Oracle

A CI source answering every query exactly from a known DAG.
"""

from typing import AbstractSet, Tuple

from local_cde_discovery.ci.counted import CountedCi
from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.dsep import d_separated
from local_cde_discovery.interfaces.ci_source import CiResult, CiSource


class OracleCi(CiSource):
    """Perfect CI answers read off a DAG."""

    def __init__(self, g: Dag):
        self.g = g

    @property
    def n_vars(self) -> int:
        return self.g.n

    @property
    def names(self) -> Tuple[str, ...]:
        return self.g.names

    def test(self, x: int, y: int, z: AbstractSet[int]) -> CiResult:
        self.check_query(x, y, z)
        separated = d_separated(self.g, x, y, z)
        return CiResult(independent=separated, p_value=1.0 if separated else 0.0)


def oracle_ci(g: Dag) -> CountedCi:
    """
    Counting CI source whose answers equal d-separation in ``g``.

    Args:
        g: The DAG

    Returns:
        A counted oracle source
    """
    return CountedCi(OracleCi(g))
