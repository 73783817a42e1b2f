# Location: local_cde_discovery/ci/fisher_z.py
"""
Fisher-z Test

Partial-correlation CI test for continuous data. The correlation matrix is
computed once per source; each query inverts only the sub-matrix over
``{x, y} | z``.
"""

import logging
from typing import AbstractSet, Tuple

import numpy as np
from scipy import stats

from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.core.exceptions import CiTestError, InsufficientSamplesError
from local_cde_discovery.interfaces.ci_source import CiResult, CiSource

logger = logging.getLogger(__name__)

DEFAULT_CONDITION_LIMIT = 1e12
_R_CLIP = 1.0 - 1e-12


class FisherZ(CiSource):
    """
    Fisher-z test on partial correlations from the precision-matrix formula.

    A sub-matrix whose condition number exceeds ``condition_limit`` is treated
    as singular: the query answers dependent and is flagged degenerate.
    """

    def __init__(
        self,
        data: Dataset,
        alpha: float = 0.05,
        condition_limit: float = DEFAULT_CONDITION_LIMIT,
    ):
        if data.kind is not DataKind.CONTINUOUS:
            raise CiTestError("Fisher-z needs a continuous dataset")
        if not 0.0 < alpha < 1.0:
            raise CiTestError(f"alpha must lie in (0, 1), got {alpha}")
        self.data = data
        self.alpha = alpha
        self.condition_limit = condition_limit
        with np.errstate(divide="ignore", invalid="ignore"):
            corr = np.corrcoef(data.values, rowvar=False)
        self._corr = np.atleast_2d(np.nan_to_num(corr, nan=0.0))
        np.fill_diagonal(self._corr, 1.0)

    @property
    def n_vars(self) -> int:
        return self.data.n_vars

    @property
    def names(self) -> Tuple[str, ...]:
        return self.data.names

    def partial_correlation(
        self, x: int, y: int, z: AbstractSet[int]
    ) -> Tuple[float, bool]:
        """
        Partial correlation of x and y given z.

        Returns:
            (r, degenerate) where degenerate marks an ill-conditioned sub-matrix
        """
        idx = [x, y, *sorted(z)]
        sub = self._corr[np.ix_(idx, idx)]
        cond = np.linalg.cond(sub)
        if not np.isfinite(cond) or cond > self.condition_limit:
            precision = np.linalg.pinv(sub)
            degenerate = True
        else:
            precision = np.linalg.inv(sub)
            degenerate = False
        denom = np.sqrt(abs(precision[0, 0] * precision[1, 1]))
        r = -precision[0, 1] / denom if denom > 0 else 0.0
        return float(np.clip(r, -_R_CLIP, _R_CLIP)), degenerate

    def test(self, x: int, y: int, z: AbstractSet[int]) -> CiResult:
        self.check_query(x, y, z)
        n = self.data.n_samples
        if n <= len(z) + 3:
            raise InsufficientSamplesError(
                f"Fisher-z needs more than {len(z) + 3} samples, have {n}"
            )
        r, degenerate = self.partial_correlation(x, y, z)
        if degenerate:
            logger.warning(
                f"Singular correlation sub-matrix for ({x}, {y} | {sorted(z)}); "
                "answering dependent"
            )
            return CiResult(independent=False, p_value=0.0, degenerate=True)
        statistic = float(np.sqrt(n - len(z) - 3) * abs(np.arctanh(r)))
        p_value = float(2.0 * stats.norm.sf(statistic))
        return CiResult(
            independent=p_value > self.alpha, p_value=p_value, statistic=statistic
        )


def fisher_z(
    data: Dataset, x: int, y: int, z: AbstractSet[int], alpha: float = 0.05
) -> bool:
    """
    One-off Fisher-z query. Build a ``FisherZ`` source for repeated queries.

    Args:
        data: Continuous dataset
        x: First variable
        y: Second variable
        z: Conditioning set
        alpha: Significance level

    Returns:
        True iff the two-sided p-value exceeds alpha
    """
    return FisherZ(data, alpha).independent(x, y, z)
