# Location: local_cde_discovery/ci/sepsets.py
"""
Separating-Set Cache

Per-pair record of skeleton-search outcomes, shared across hops so no pair is
searched twice.
"""

import enum
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple


class SepsetStatus(enum.Enum):
    """Outcome recorded for an unordered node pair."""

    UNTESTED = "untested"
    SEPARATED = "separated"
    NO_SEPSET = "no_sepset"


class SepsetCache:
    """
    Map from unordered node pair to its separating set, or to proven absence.

    Entries are only ever added or upgraded from ``NO_SEPSET`` to
    ``SEPARATED``; a recorded separating set is never replaced.
    """

    def __init__(self) -> None:
        self._entries: Dict[FrozenSet[int], Optional[FrozenSet[int]]] = {}

    @staticmethod
    def _key(a: int, b: int) -> FrozenSet[int]:
        return frozenset((a, b))

    def status(self, a: int, b: int) -> SepsetStatus:
        key = self._key(a, b)
        if key not in self._entries:
            return SepsetStatus.UNTESTED
        if self._entries[key] is None:
            return SepsetStatus.NO_SEPSET
        return SepsetStatus.SEPARATED

    def is_separated(self, a: int, b: int) -> bool:
        return self.status(a, b) is SepsetStatus.SEPARATED

    def separating_set(self, a: int, b: int) -> Optional[FrozenSet[int]]:
        """The recorded separating set, or None when none is recorded."""
        return self._entries.get(self._key(a, b))

    def record_separated(self, a: int, b: int, sepset: Iterable[int]) -> None:
        key = self._key(a, b)
        if self._entries.get(key) is None:
            self._entries[key] = frozenset(sepset)

    def record_no_sepset(self, a: int, b: int) -> None:
        self._entries.setdefault(self._key(a, b), None)

    def items(self) -> Iterator[Tuple[Tuple[int, int], Optional[FrozenSet[int]]]]:
        """Entries as ``((a, b), sepset)`` with ``a < b``, in sorted order."""
        for key in sorted(self._entries, key=sorted):
            a, b = sorted(key)
            yield (a, b), self._entries[key]

    def copy(self) -> "SepsetCache":
        clone = SepsetCache()
        clone._entries = dict(self._entries)
        return clone

    def __len__(self) -> int:
        return len(self._entries)
