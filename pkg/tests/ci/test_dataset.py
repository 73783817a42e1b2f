"""Tests for datasets and the separating-set cache."""

import numpy as np
import pytest

from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.ci.sepsets import SepsetCache, SepsetStatus
from local_cde_discovery.core.exceptions import DatasetError


class TestDataset:
    def test_csv_round_trip(self, tmp_path):
        rng = np.random.default_rng(0)
        data = Dataset(rng.normal(size=(20, 3)), names=("a", "b", "c"))
        path = tmp_path / "data.csv"
        data.to_csv(path)
        loaded = Dataset.from_csv(path)
        assert loaded.names == ("a", "b", "c")
        np.testing.assert_allclose(loaded.values, data.values, rtol=1e-8)

    def test_binary_round_trip(self, tmp_path):
        data = Dataset(np.array([[0, 1], [1, 1]]), kind=DataKind.BINARY)
        path = tmp_path / "binary.csv"
        data.to_csv(path)
        loaded = Dataset.from_csv(path, kind=DataKind.BINARY)
        np.testing.assert_array_equal(loaded.values, data.values)
        assert loaded.values.dtype == np.int64

    def test_column_subset(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("a,b,c\n1,2,3\n4,5,6\n")
        data = Dataset.from_csv(path, columns=["c", "a"])
        assert data.names == ("c", "a")
        np.testing.assert_array_equal(data.values, [[3, 1], [6, 4]])

    def test_missing_column(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(DatasetError):
            Dataset.from_csv(path, columns=["z"])

    def test_missing_values(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("a,b\n1,\n2,3\n")
        with pytest.raises(DatasetError):
            Dataset.from_csv(path)

    def test_non_numeric(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("a,b\n1,x\n2,3\n")
        with pytest.raises(DatasetError):
            Dataset.from_csv(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DatasetError):
            Dataset.from_csv(tmp_path / "absent.csv")

    def test_binary_domain(self):
        with pytest.raises(DatasetError):
            Dataset(np.array([[0, 2], [1, 0]]), kind=DataKind.BINARY)

    @pytest.mark.parametrize(
        "values",
        [np.zeros(3), np.zeros((0, 2)), np.array([[1.0, np.nan]])],
    )
    def test_rejects_shape_and_nan(self, values):
        with pytest.raises(DatasetError):
            Dataset(values)

    def test_rejects_duplicate_names(self):
        with pytest.raises(DatasetError):
            Dataset(np.zeros((2, 2)), names=("a", "a"))

    def test_values_are_read_only(self):
        data = Dataset(np.zeros((2, 2)))
        with pytest.raises(ValueError):
            data.values[0, 0] = 1.0

    def test_frame_and_lookup(self):
        data = Dataset(np.zeros((4, 2)), names=("p", "q"))
        assert list(data.to_frame().columns) == ["p", "q"]
        assert data.node("q") == 1
        assert (data.n_samples, data.n_vars) == (4, 2)


class TestSepsetCache:
    def test_status_transitions(self):
        cache = SepsetCache()
        assert cache.status(0, 1) is SepsetStatus.UNTESTED
        cache.record_no_sepset(1, 0)
        assert cache.status(0, 1) is SepsetStatus.NO_SEPSET
        assert cache.separating_set(0, 1) is None
        cache.record_separated(0, 1, [2])
        assert cache.is_separated(1, 0)
        assert cache.separating_set(1, 0) == {2}

    def test_sepset_never_replaced(self):
        cache = SepsetCache()
        cache.record_separated(0, 1, [])
        cache.record_separated(0, 1, [3])
        cache.record_no_sepset(0, 1)
        assert cache.separating_set(0, 1) == frozenset()

    def test_items_sorted(self):
        cache = SepsetCache()
        cache.record_separated(3, 1, [0])
        cache.record_no_sepset(2, 0)
        assert list(cache.items()) == [((0, 2), None), ((1, 3), frozenset({0}))]
        assert len(cache) == 2

    def test_copy_is_independent(self):
        cache = SepsetCache()
        cache.record_separated(0, 1, [])
        clone = cache.copy()
        clone.record_separated(2, 3, [])
        assert len(cache) == 1 and len(clone) == 2
