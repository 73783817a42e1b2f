# Location: local_cde_discovery/discovery/locpc.py
"""
LocPC

Local PC-style discovery around a target. The skeleton grows one hop at a
time from the target outward; each hop connects the frontier to every node it
is not yet known to be separated from, then prunes level by level with
conditioning sets drawn from adjacency snapshots. Orientation (background
knowledge arrows, unshielded colliders, Meek closure, double bars) is applied
to a copy, so the skeleton search can resume at the next hop.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Set, Tuple

from local_cde_discovery.ci.counted import CountedCi
from local_cde_discovery.ci.sepsets import SepsetCache
from local_cde_discovery.discovery.background import BackgroundKnowledge
from local_cde_discovery.graphs.dag import hop_neighborhood
from local_cde_discovery.graphs.leg import Leg, LegBuilder
from local_cde_discovery.graphs.orientation import (
    meek_closure,
    orient_colliders_in_place,
)
from local_cde_discovery.interfaces.ci_source import CiSource
from local_cde_discovery.local.leg_builder import mark_double_bars
from local_cde_discovery.utils.subsets import DEFAULT_WARN_SIZE, subsets_of_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocPcResult:
    """Outcome of one LocPC run."""

    leg: Leg
    sepsets: SepsetCache
    visited: FrozenSet[int]
    ci_count: int
    nnc_ci_count: int = 0


class LocPcSearch:
    """
    Resumable LocPC state around one target.

    ``advance()`` runs the skeleton search of the next hop; ``orient()``
    returns the LEG at the current hop without touching the skeleton.
    """

    def __init__(
        self,
        ci: CountedCi,
        y: int,
        sepsets: Optional[SepsetCache] = None,
        bk: Optional[BackgroundKnowledge] = None,
        warn_size: int = DEFAULT_WARN_SIZE,
    ):
        if not 0 <= y < ci.n_vars:
            raise ValueError(f"Target {y} out of range for {ci.n_vars} variables")
        self.ci = ci
        self.y = y
        self.sepsets = sepsets if sepsets is not None else SepsetCache()
        self.bk = bk or BackgroundKnowledge.empty()
        self.warn_size = warn_size
        self.hop = -1
        self.visited: Set[int] = set()
        self.frontier: FrozenSet[int] = frozenset({y})
        self.bk_arrows: Set[Tuple[int, int]] = set()
        self.skeleton = LegBuilder(ci.n_vars, target=y, hop=0, names=ci.names)
        self.logger = logging.getLogger(__name__)

    @property
    def n_vars(self) -> int:
        return self.ci.n_vars

    def _separated(self, a: int, b: int, z: FrozenSet[int]) -> bool:
        return self.ci.independent(a, b, z)

    def advance(self) -> int:
        """
        Run the skeleton search for the next hop.

        Returns:
            The hop just completed
        """
        self.hop += 1
        frontier = sorted(self.frontier)
        skeleton = self.skeleton
        # Only a search finished at an earlier hop can vouch for an edge.
        searched = frozenset(self.visited)

        for d in frontier:
            for b in range(self.n_vars):
                if b != d and not self.sepsets.is_separated(d, b):
                    skeleton.add_undirected(d, b)

        s = 0
        while any(len(skeleton.neighbors(d)) - 1 >= s for d in frontier):
            snapshot: Dict[int, FrozenSet[int]] = {
                d: skeleton.neighbors(d) for d in frontier
            }
            for d in frontier:
                self.visited.add(d)
                for b in sorted(skeleton.neighbors(d)):
                    if b in searched and self.bk.forbids(d, b):
                        self.bk_arrows.add((d, b))
                        continue
                    pool = snapshot[d] - {b}
                    if len(pool) < s:
                        continue
                    for z in subsets_of_size(pool, s, self.warn_size):
                        if self._separated(d, b, z):
                            self.sepsets.record_separated(d, b, z)
                            skeleton.remove(d, b)
                            break
            s += 1

        for d in frontier:
            for b in skeleton.neighbors(d):
                self.sepsets.record_no_sepset(d, b)
        self.visited.update(frontier)

        reached: Set[int] = set()
        for d in frontier:
            reached |= skeleton.neighbors(d)
        self.frontier = frozenset(reached)
        self.logger.debug(
            f"Hop {self.hop}: {len(frontier)} frontier nodes searched, "
            f"{len(self.visited)} visited, {self.ci.count} CI tests so far"
        )
        return self.hop

    def orient(self) -> Tuple[Leg, int]:
        """
        Orient a copy of the current skeleton.

        Returns:
            The LEG at the current hop and the number of CI tests first
            issued by the double-bar rule
        """
        if self.hop < 0:
            raise ValueError("No hop has been searched yet")
        skeleton = self.skeleton.freeze()
        hood = hop_neighborhood(skeleton, self.y, self.hop)

        builder = LegBuilder.from_leg(skeleton)
        builder.hop = self.hop
        for d, b in sorted(self.bk_arrows):
            if builder.adjacent(d, b):
                builder.orient(d, b)
        orient_colliders_in_place(builder, self.sepsets, hood)
        meek_closure(builder, hood)

        before = self.ci.count
        mark_double_bars(builder, hood, self._separated)
        nnc_count = self.ci.count - before

        builder.restrict_to_pairs_touching(hood)
        return builder.freeze(), nnc_count


def loc_pc(
    ci: CiSource,
    n_vars: int,
    y: int,
    h: int,
    sepsets: Optional[SepsetCache] = None,
    bk: Optional[BackgroundKnowledge] = None,
) -> LocPcResult:
    """
    Discover the LEG around ``y`` at hop ``h``.

    Args:
        ci: CI source; wrapped in a counting source unless it already is one
        n_vars: Number of variables
        y: Target node
        h: Hop count
        sepsets: Separating sets from an earlier run, updated in place
        bk: Optional background knowledge

    Returns:
        The LEG, separating sets, visited nodes and the CI tests spent

    Raises:
        ValueError: If h is negative or n_vars disagrees with the source
    """
    if h < 0:
        raise ValueError(f"Hop count must be non-negative, got {h}")
    if n_vars != ci.n_vars:
        raise ValueError(f"n_vars={n_vars} but the CI source has {ci.n_vars}")
    source = ci if isinstance(ci, CountedCi) else CountedCi(ci)
    start = source.count

    search = LocPcSearch(source, y, sepsets, bk)
    for _ in range(h + 1):
        search.advance()
    leg, nnc_count = search.orient()

    logger.info(
        f"LocPC around {source.names[y]} at hop {h}: {len(leg.edges)} edges, "
        f"{source.count - start} CI tests"
    )
    return LocPcResult(
        leg=leg,
        sepsets=search.sepsets,
        visited=frozenset(search.visited),
        ci_count=source.count - start,
        nnc_ci_count=nnc_count,
    )
