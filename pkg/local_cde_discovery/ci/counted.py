# Location: local_cde_discovery/ci/counted.py
"""
Counted CI Source

Wraps any CI source with a deduplicating memo, a monotone count of distinct
queries and an optional audit trail. Queries are canonicalized so that
``(x, y | z)`` and ``(y, x | z)`` are one query.
"""

import logging
import threading
from dataclasses import dataclass
from typing import AbstractSet, Dict, FrozenSet, List, Optional, TextIO, Tuple

from local_cde_discovery.interfaces.ci_source import CiResult, CiSource

logger = logging.getLogger(__name__)

QueryKey = Tuple[int, int, FrozenSet[int]]


@dataclass(frozen=True)
class AuditRecord:
    """One first-time CI query and its answer."""

    x: int
    y: int
    z: Tuple[int, ...]
    result: CiResult

    def format(self, names: Tuple[str, ...]) -> str:
        """Render as ``x;y;z-list;verdict;p-value``."""
        verdict = "independent" if self.result.independent else "dependent"
        z_list = ",".join(names[v] for v in self.z)
        return (
            f"{names[self.x]};{names[self.y]};{z_list};{verdict};"
            f"{self.result.p_value:.6g}"
        )


class CountedCi(CiSource):
    """
    Deduplicating, counting wrapper around a CI source.

    Safe for concurrent queries: the memo and counter are guarded by a lock.
    Answers are never changed, only remembered.
    """

    def __init__(self, source: CiSource, audit: Optional[TextIO] = None):
        self.source = source
        self.audit = audit
        self.records: List[AuditRecord] = []
        self._memo: Dict[QueryKey, CiResult] = {}
        self._lock = threading.Lock()
        self.logger = logging.getLogger(__name__)

    @property
    def n_vars(self) -> int:
        return self.source.n_vars

    @property
    def names(self) -> Tuple[str, ...]:
        return self.source.names

    @property
    def count(self) -> int:
        """Number of distinct queries answered so far."""
        with self._lock:
            return len(self._memo)

    @staticmethod
    def canonical(x: int, y: int, z: AbstractSet[int]) -> QueryKey:
        return (min(x, y), max(x, y), frozenset(z))

    def test(self, x: int, y: int, z: AbstractSet[int]) -> CiResult:
        key = self.canonical(x, y, z)
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached

        self.check_query(x, y, z)
        result = self.source.test(key[0], key[1], key[2])

        with self._lock:
            if key in self._memo:
                return self._memo[key]
            self._memo[key] = result
            record = AuditRecord(key[0], key[1], tuple(sorted(key[2])), result)
            self.records.append(record)
            if self.audit is not None:
                self.audit.write(record.format(self.names) + "\n")

        self.logger.debug(
            f"CI #{len(self.records)}: ({key[0]}, {key[1]} | {sorted(key[2])}) -> "
            f"{'indep' if result.independent else 'dep'} p={result.p_value:.4g}"
        )
        return result


def counted(source: CiSource, audit: Optional[TextIO] = None) -> CountedCi:
    """
    Wrap ``source`` with deduplication and counting.

    Args:
        source: Any CI source
        audit: Optional text sink receiving one line per first-time query

    Returns:
        The counted source
    """
    return CountedCi(source, audit)
