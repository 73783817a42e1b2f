# Location: local_cde_discovery/discovery/background.py
"""
Background Knowledge

Forbidden-descendant statements: ``D`` listed under ``B`` asserts that D is
not a descendant of B. During LocPC such a statement lets an already visited
B vouch for the edge D - B, which is then oriented D -> B without a retest.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from local_cde_discovery.core.exceptions import (
    BackgroundKnowledgeError,
    GraphError,
)
from local_cde_discovery.graphs.dag import Dag, resolve_node

logger = logging.getLogger(__name__)

KEYWORD = "nondesc"


@dataclass(frozen=True)
class BackgroundKnowledge:
    """Map from node B to the nodes known not to descend from B."""

    forbidden_descendants: Dict[int, FrozenSet[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for b, nondesc in self.forbidden_descendants.items():
            if b in nondesc:
                raise BackgroundKnowledgeError(
                    f"Node {b} is listed as its own non-descendant"
                )

    @classmethod
    def empty(cls) -> "BackgroundKnowledge":
        return cls()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "BackgroundKnowledge":
        """
        Build from ``(d, b)`` pairs, each meaning d is not a descendant of b.

        Raises:
            BackgroundKnowledgeError: If some pair has d == b
        """
        grouped: Dict[int, Set[int]] = {}
        for d, b in pairs:
            grouped.setdefault(b, set()).add(d)
        return cls({b: frozenset(ds) for b, ds in grouped.items()})

    @classmethod
    def from_lines(
        cls, lines: Iterable[str], names: Sequence[str]
    ) -> "BackgroundKnowledge":
        """
        Parse ``nondesc <D> <B>`` lines; blank lines and ``#`` comments are
        skipped. Nodes are given by name or index.

        Args:
            lines: Text lines
            names: Node display names, position = index

        Returns:
            The parsed knowledge

        Raises:
            BackgroundKnowledgeError: On malformed lines or unknown nodes
        """
        pairs: List[Tuple[int, int]] = []
        for number, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 3 or tokens[0] != KEYWORD:
                raise BackgroundKnowledgeError(
                    f"Line {number}: expected '{KEYWORD} <D> <B>', got {raw.strip()!r}"
                )
            try:
                d = resolve_node(names, tokens[1])
                b = resolve_node(names, tokens[2])
            except GraphError as e:
                raise BackgroundKnowledgeError(f"Line {number}: {e}") from e
            pairs.append((d, b))
        return cls.from_pairs(pairs)

    @classmethod
    def from_file(cls, path: str, names: Sequence[str]) -> "BackgroundKnowledge":
        """Read a background-knowledge file; see ``from_lines``."""
        if not os.path.exists(path):
            raise BackgroundKnowledgeError(
                f"Background knowledge file not found: {path}"
            )
        with open(path, "r") as f:
            knowledge = cls.from_lines(f, names)
        logger.info(f"Loaded {len(knowledge)} non-descendant statements from {path}")
        return knowledge

    def forbids(self, d: int, b: int) -> bool:
        """True iff ``d`` is declared a non-descendant of ``b``."""
        return d in self.forbidden_descendants.get(b, frozenset())

    def is_consistent_with(self, g: Dag) -> bool:
        """True iff no statement is contradicted by a directed path in ``g``."""
        return all(
            not nondesc & g.descendants(b)
            for b, nondesc in self.forbidden_descendants.items()
        )

    def __len__(self) -> int:
        return sum(len(v) for v in self.forbidden_descendants.values())
