# Location: local_cde_discovery/utils/subsets.py
"""
Subset Enumeration

Deterministic conditioning-set enumeration shared by every search that walks
subsets of an adjacency set.
"""

import logging
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, Optional

logger = logging.getLogger(__name__)

DEFAULT_WARN_SIZE = 12


def subsets_of_size(
    pool: Iterable[int], size: int, warn_size: int = DEFAULT_WARN_SIZE
) -> Iterator[FrozenSet[int]]:
    """
    Yield subsets of ``pool`` with exactly ``size`` elements.

    Subsets come in lexicographic order over the sorted node indices.

    Args:
        pool: Candidate node indices
        size: Subset size
        warn_size: Size above which a warning is logged

    Yields:
        Frozen subsets of the pool
    """
    ordered = sorted(set(pool))
    if size < 0 or size > len(ordered):
        return
    if size > warn_size:
        logger.warning(
            f"Enumerating conditioning sets of size {size} from {len(ordered)} nodes"
        )
    for combo in combinations(ordered, size):
        yield frozenset(combo)


def subsets_up_to(
    pool: Iterable[int],
    max_size: Optional[int] = None,
    warn_size: int = DEFAULT_WARN_SIZE,
) -> Iterator[FrozenSet[int]]:
    """
    Yield subsets of ``pool`` by ascending size, then lexicographically.

    Args:
        pool: Candidate node indices
        max_size: Largest subset size (defaults to the pool size)
        warn_size: Size above which a warning is logged

    Yields:
        Frozen subsets of the pool, smallest first
    """
    ordered = sorted(set(pool))
    limit = len(ordered) if max_size is None else min(max_size, len(ordered))
    for size in range(limit + 1):
        yield from subsets_of_size(ordered, size, warn_size)
