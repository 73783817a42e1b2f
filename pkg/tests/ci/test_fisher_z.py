"""Tests for the Fisher-z partial-correlation test."""

import numpy as np
import pytest

from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.ci.fisher_z import FisherZ, fisher_z
from local_cde_discovery.core.exceptions import CiTestError, InsufficientSamplesError


@pytest.fixture
def chain_data():
    """x -> z -> y plus an independent w."""
    rng = np.random.default_rng(7)
    n = 3000
    x = rng.normal(size=n)
    z = 0.8 * x + rng.normal(size=n)
    y = 0.8 * z + rng.normal(size=n)
    w = rng.normal(size=n)
    return Dataset(np.column_stack([x, y, z, w]), names=("x", "y", "z", "w"))


class TestFisherZ:
    def test_marginal_dependence(self, chain_data):
        result = FisherZ(chain_data).test(0, 1, set())
        assert not result.independent
        assert result.p_value < 1e-6
        assert result.statistic > 0

    def test_chain_blocked_by_middle(self, chain_data):
        source = FisherZ(chain_data, alpha=0.001)
        r, degenerate = source.partial_correlation(0, 1, {2})
        assert abs(r) < 0.1
        assert not degenerate
        assert source.independent(0, 1, {2})

    def test_independent_column(self, chain_data):
        assert FisherZ(chain_data, alpha=0.001).independent(0, 3, set())

    def test_empty_set_is_pearson(self, chain_data):
        r, _ = FisherZ(chain_data).partial_correlation(0, 2, set())
        expected = np.corrcoef(chain_data.values[:, 0], chain_data.values[:, 2])[0, 1]
        assert r == pytest.approx(expected, abs=1e-9)

    def test_near_copy_is_dependent(self):
        rng = np.random.default_rng(1)
        x = rng.normal(size=200)
        data = Dataset(np.column_stack([x, x + 0.01 * rng.normal(size=200)]))
        assert not FisherZ(data).independent(0, 1, set())

    def test_exact_copy_is_degenerate(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=100)
        data = Dataset(np.column_stack([x, x, rng.normal(size=100)]))
        result = FisherZ(data).test(0, 2, {1})
        assert result.degenerate
        assert not result.independent

    def test_too_few_samples(self):
        data = Dataset(np.array([[0.1, 0.2, 0.3], [0.4, 0.1, 0.9], [0.5, 0.7, 0.2]]))
        with pytest.raises(InsufficientSamplesError):
            FisherZ(data).test(0, 1, set())

    def test_insufficient_samples_is_ci_error(self):
        assert issubclass(InsufficientSamplesError, CiTestError)

    def test_rejects_binary_data(self):
        data = Dataset(np.array([[0, 1], [1, 0]]), kind=DataKind.BINARY)
        with pytest.raises(CiTestError):
            FisherZ(data)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1])
    def test_rejects_alpha(self, chain_data, alpha):
        with pytest.raises(CiTestError):
            FisherZ(chain_data, alpha=alpha)

    def test_rejects_bad_query(self, chain_data):
        with pytest.raises(CiTestError):
            FisherZ(chain_data).test(0, 1, {1})

    def test_one_off_query(self, chain_data):
        assert not fisher_z(chain_data, 0, 2, set())
