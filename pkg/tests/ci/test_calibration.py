"""Null rejection rates of the statistical CI tests."""

import numpy as np
import pytest

from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.ci.fisher_z import FisherZ
from local_cde_discovery.ci.g_square import GSquare

TRIALS = 200
N_SAMPLES = 5000
ALPHA = 0.05


@pytest.mark.slow
class TestNullRejectionRate:
    def test_fisher_z(self):
        rng = np.random.default_rng(2024)
        rejected = 0
        for _ in range(TRIALS):
            values = rng.normal(size=(N_SAMPLES, 3))
            test = FisherZ(Dataset(values), ALPHA)
            rejected += not test.independent(0, 1, {2})
        assert 0.02 <= rejected / TRIALS <= 0.09

    def test_g_square(self):
        rng = np.random.default_rng(2025)
        rejected = 0
        for _ in range(TRIALS):
            values = rng.integers(0, 2, size=(N_SAMPLES, 3))
            test = GSquare(Dataset(values, DataKind.BINARY), ALPHA)
            rejected += not test.independent(0, 1, {2})
        assert 0.02 <= rejected / TRIALS <= 0.09
