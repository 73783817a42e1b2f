# Location: local_cde_discovery/discovery/locpc_cde.py
"""
LocPC-CDE

Decides whether the controlled direct effect of a treatment X on a target Y
is identifiable, growing the discovered neighborhood of Y one hop at a time
and stopping as soon as the answer is known: Y's edges are all oriented, X is
not adjacent to Y or is its child, or the non-orientability criterion holds.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional

from local_cde_discovery.ci.counted import CountedCi
from local_cde_discovery.ci.sepsets import SepsetCache
from local_cde_discovery.discovery.background import BackgroundKnowledge
from local_cde_discovery.discovery.locpc import LocPcSearch
from local_cde_discovery.graphs.leg import Leg
from local_cde_discovery.interfaces.ci_source import CiSource
from local_cde_discovery.local.noc import (
    cde_identifiable,
    grow_noc_candidate,
    noc_satisfied,
)
from local_cde_discovery.utils.subsets import DEFAULT_WARN_SIZE

logger = logging.getLogger(__name__)


class StopReason(enum.Enum):
    """Why the hop loop ended."""

    ALL_ORIENTED = "AllOriented"
    NOC_TRIGGERED = "NocTriggered"
    TREATMENT_NON_ADJACENT = "TreatmentNonAdjacent"
    TREATMENT_IS_CHILD = "TreatmentIsChild"
    EXHAUSTED = "Exhausted"


@dataclass
class CdeReport:
    """Identifiability verdict with the evidence behind it."""

    identifiable: bool
    adjustment_set: Optional[FrozenSet[int]]
    leg: Leg
    hops_used: int
    stop_reason: StopReason
    ci_count: int
    treatment: int = 0
    noc_candidate: Optional[FrozenSet[int]] = None
    ci_history: List[int] = field(default_factory=list)
    nnc_ci_count: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view with node display names."""
        names = self.leg.names

        def named(nodes: Optional[FrozenSet[int]]) -> Optional[List[str]]:
            return None if nodes is None else [names[v] for v in sorted(nodes)]

        return {
            "treatment": names[self.treatment],
            "target": names[self.leg.target],
            "identifiable": self.identifiable,
            "adjustment_set": named(self.adjustment_set),
            "hops_used": self.hops_used,
            "stop_reason": self.stop_reason.value,
            "ci_count": self.ci_count,
            "noc_candidate": named(self.noc_candidate),
            "ci_history": list(self.ci_history),
        }


def _stop_reason(leg: Leg, x: int, y: int, noc_hit: bool) -> StopReason:
    if x not in leg.neighbors(y):
        return StopReason.TREATMENT_NON_ADJACENT
    if leg.is_directed(y, x):
        return StopReason.TREATMENT_IS_CHILD
    if not leg.non_arrow_neighbors(y):
        return StopReason.ALL_ORIENTED
    if noc_hit:
        return StopReason.NOC_TRIGGERED
    return StopReason.EXHAUSTED


def loc_pc_cde(
    ci: CiSource,
    n_vars: int,
    x: int,
    y: int,
    bk: Optional[BackgroundKnowledge] = None,
    check_noc: bool = True,
    warn_size: int = DEFAULT_WARN_SIZE,
) -> CdeReport:
    """
    Decide identifiability of the controlled direct effect of ``x`` on ``y``.

    Args:
        ci: CI source; wrapped in a counting source unless it already is one
        n_vars: Number of variables
        x: Treatment
        y: Target
        bk: Optional background knowledge
        check_noc: Stop early when the non-orientability criterion holds
        warn_size: Conditioning-set size above which enumeration is logged

    Returns:
        The report; when identifiable, the adjustment set is the parents of
        ``y`` in the final LEG

    Raises:
        ValueError: If x == y or n_vars disagrees with the source
    """
    if x == y:
        raise ValueError("Treatment and target must differ")
    if n_vars != ci.n_vars:
        raise ValueError(f"n_vars={n_vars} but the CI source has {ci.n_vars}")
    source = ci if isinstance(ci, CountedCi) else CountedCi(ci)
    start = source.count
    names = source.names

    search = LocPcSearch(source, y, SepsetCache(), bk, warn_size)
    search.advance()
    leg, nnc_total = search.orient()
    history = [source.count - start]
    hood = leg.neighborhood()
    candidate: Optional[FrozenSet[int]] = None
    noc_hit = False

    while not cde_identifiable(leg, x, y):
        search.advance()
        leg, nnc_count = search.orient()
        nnc_total += nnc_count
        history.append(source.count - start)

        grown = leg.neighborhood()
        if grown == hood:
            logger.debug(f"Neighborhood stopped growing at hop {search.hop}")
            break
        hood = grown

        if check_noc and leg.non_arrow_neighbors(y):
            candidate = grow_noc_candidate(leg, {y})
            if noc_satisfied(leg, candidate):
                noc_hit = True
                break

    reason = _stop_reason(leg, x, y, noc_hit)
    identifiable = cde_identifiable(leg, x, y)
    report = CdeReport(
        identifiable=identifiable,
        adjustment_set=leg.parents(y) if identifiable else None,
        leg=leg,
        hops_used=search.hop,
        stop_reason=reason,
        ci_count=source.count - start,
        treatment=x,
        noc_candidate=candidate,
        ci_history=history,
        nnc_ci_count=nnc_total,
    )
    logger.info(
        f"CDE {names[x]} -> {names[y]}: "
        f"{'identifiable' if identifiable else 'not identifiable'} "
        f"({reason.value}) after {search.hop} hops, {report.ci_count} CI tests"
    )
    return report
