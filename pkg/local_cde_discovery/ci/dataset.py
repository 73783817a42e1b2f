# Location: local_cde_discovery/ci/dataset.py
"""
Datasets

Sample-major numeric matrices with variable names and a value kind, read from
and written to CSV with pandas.
"""

import enum
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from local_cde_discovery.core.exceptions import DatasetError
from local_cde_discovery.graphs.dag import default_names, resolve_node

logger = logging.getLogger(__name__)


class DataKind(enum.Enum):
    """Value domain of a dataset."""

    CONTINUOUS = "continuous"
    BINARY = "binary"


@dataclass(frozen=True)
class Dataset:
    """
    Immutable sample matrix, one row per sample and one column per variable.

    Binary datasets hold only 0 and 1; no dataset holds missing values.
    """

    values: np.ndarray
    kind: DataKind = DataKind.CONTINUOUS
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.ndim != 2:
            raise DatasetError(f"Expected a 2-D matrix, got shape {values.shape}")
        if values.shape[0] < 1:
            raise DatasetError("Dataset needs at least one sample")
        if not np.issubdtype(values.dtype, np.number):
            raise DatasetError(f"Non-numeric values of dtype {values.dtype}")
        if np.isnan(values.astype(float)).any():
            raise DatasetError("Dataset contains missing values")
        if self.kind is DataKind.BINARY:
            if not np.isin(values, (0, 1)).all():
                raise DatasetError("Binary dataset holds values other than 0 and 1")
            values = values.astype(np.int64)
        else:
            values = values.astype(np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

        names = self.names or default_names(values.shape[1])
        if len(names) != values.shape[1] or len(set(names)) != len(names):
            raise DatasetError("Variable names must be unique, one per column")
        object.__setattr__(self, "names", tuple(names))

    @property
    def n_samples(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_vars(self) -> int:
        return int(self.values.shape[1])

    def node(self, key: Union[str, int]) -> int:
        return resolve_node(self.names, key)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, columns=list(self.names))

    def to_csv(self, path: Union[str, Path]) -> None:
        """Write a header row of names and one sample per row."""
        frame = self.to_frame()
        if self.kind is DataKind.CONTINUOUS:
            frame.to_csv(path, index=False, float_format="%.10g")
        else:
            frame.to_csv(path, index=False)

    @classmethod
    def from_csv(
        cls,
        path: Union[str, Path],
        kind: DataKind = DataKind.CONTINUOUS,
        columns: Optional[Sequence[str]] = None,
    ) -> "Dataset":
        """
        Read a CSV with a header row of variable names.

        Args:
            path: CSV file
            kind: Value domain
            columns: Optional subset of columns to keep, in order

        Returns:
            The dataset

        Raises:
            DatasetError: On unreadable files, missing values or bad domains
        """
        try:
            frame = pd.read_csv(path)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise DatasetError(f"Cannot read {path}: {e}") from e
        if columns is not None:
            missing = [c for c in columns if c not in frame.columns]
            if missing:
                raise DatasetError(f"Columns not in {path}: {missing}")
            frame = frame[list(columns)]
        if frame.isna().any().any():
            raise DatasetError(f"{path} contains missing values")
        try:
            values = frame.to_numpy(dtype=float)
        except ValueError as e:
            raise DatasetError(f"{path} contains non-numeric values: {e}") from e
        logger.info(f"Loaded {values.shape[0]} samples of {values.shape[1]} variables")
        return cls(values=values, kind=kind, names=tuple(str(c) for c in frame.columns))
