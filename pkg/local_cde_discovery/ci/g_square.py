# Location: local_cde_discovery/ci/g_square.py
"""
G-square Test

Likelihood-ratio CI test for binary data, stratified over every configuration
of the conditioning set.
"""

import logging
from typing import AbstractSet, Tuple

import numpy as np
from scipy import stats

from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.core.exceptions import CiTestError
from local_cde_discovery.interfaces.ci_source import CiResult, CiSource

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES_PER_DF = 10


def contingency_table(
    values: np.ndarray, x: int, y: int, z: Tuple[int, ...]
) -> np.ndarray:
    """
    Counts of (x, y) per configuration of z.

    Each configuration of z is encoded as one integer so a single bincount
    builds the whole table.

    Returns:
        Array of shape ``(2 ** len(z), 2, 2)``
    """
    strata = np.zeros(values.shape[0], dtype=np.int64)
    for bit, v in enumerate(z):
        strata |= values[:, v].astype(np.int64) << bit
    code = strata * 4 + values[:, x].astype(np.int64) * 2 + values[:, y]
    counts = np.bincount(code, minlength=4 * (1 << len(z)))
    return counts.reshape(1 << len(z), 2, 2).astype(np.float64)


def g_statistic(table: np.ndarray) -> float:
    """
    G = 2 * sum(observed * ln(observed / expected)) over a stratified table.

    Empty strata and zero cells contribute nothing.
    """
    totals = table.sum(axis=(1, 2), keepdims=True)
    row = table.sum(axis=2, keepdims=True)
    col = table.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        expected = np.where(totals > 0, row * col / totals, 0.0)
        terms = np.where(table > 0, table * np.log(table / expected), 0.0)
    return float(max(2.0 * terms.sum(), 0.0))


class GSquare(CiSource):
    """
    G-square test on binary variables.

    Degrees of freedom are ``2 ** |z|``. When the sample is smaller than
    ``samples_per_df`` times that, the query answers independent and is
    flagged underpowered.
    """

    def __init__(
        self,
        data: Dataset,
        alpha: float = 0.05,
        samples_per_df: int = DEFAULT_SAMPLES_PER_DF,
    ):
        if data.kind is not DataKind.BINARY:
            raise CiTestError("G-square needs a binary dataset")
        if not 0.0 < alpha < 1.0:
            raise CiTestError(f"alpha must lie in (0, 1), got {alpha}")
        self.data = data
        self.alpha = alpha
        self.samples_per_df = samples_per_df

    @property
    def n_vars(self) -> int:
        return self.data.n_vars

    @property
    def names(self) -> Tuple[str, ...]:
        return self.data.names

    def test(self, x: int, y: int, z: AbstractSet[int]) -> CiResult:
        self.check_query(x, y, z)
        dof = 1 << len(z)
        if self.data.n_samples < self.samples_per_df * dof:
            logger.warning(
                f"G-square underpowered for ({x}, {y} | {sorted(z)}): "
                f"{self.data.n_samples} samples for {dof} degrees of freedom"
            )
            return CiResult(independent=True, p_value=1.0, underpowered=True)
        table = contingency_table(self.data.values, x, y, tuple(sorted(z)))
        statistic = g_statistic(table)
        p_value = float(stats.chi2.sf(statistic, dof))
        return CiResult(
            independent=p_value > self.alpha, p_value=p_value, statistic=statistic
        )


def g_square(
    data: Dataset, x: int, y: int, z: AbstractSet[int], alpha: float = 0.05
) -> bool:
    """
    One-off G-square query.

    Args:
        data: Binary dataset
        x: First variable
        y: Second variable
        z: Conditioning set
        alpha: Significance level

    Returns:
        True iff the chi-square p-value exceeds alpha
    """
    return GSquare(data, alpha).independent(x, y, z)
