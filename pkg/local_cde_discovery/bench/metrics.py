# Location: local_cde_discovery/bench/metrics.py
"""
Benchmark Metrics

Parent-set recovery scores.
"""

from typing import AbstractSet

from local_cde_discovery.core.exceptions import MetricError


def f1_parents(estimated: AbstractSet[int], truth: AbstractSet[int]) -> float:
    """
    F1 score of an estimated parent set.

    Args:
        estimated: Estimated parents
        truth: True parents, nonempty

    Returns:
        Harmonic mean of precision and recall; 0.0 when nothing true is found

    Raises:
        MetricError: If truth is empty
    """
    if not truth:
        raise MetricError("F1 is undefined for an empty true parent set")
    hits = len(set(estimated) & set(truth))
    if hits == 0:
        return 0.0
    precision = hits / len(estimated)
    recall = hits / len(truth)
    return 2 * precision * recall / (precision + recall)
