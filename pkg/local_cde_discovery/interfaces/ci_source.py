# Location: local_cde_discovery/interfaces/ci_source.py
"""
Conditional Independence Source Protocol

This module defines the interface every conditional-independence backend
implements, and the result record it returns.
"""

import abc
import math
from dataclasses import dataclass
from typing import AbstractSet, Tuple

from local_cde_discovery.core.exceptions import CiTestError


@dataclass(frozen=True)
class CiResult:
    """Outcome of one conditional-independence query."""

    independent: bool
    p_value: float
    statistic: float = math.nan
    degenerate: bool = False
    underpowered: bool = False


class CiSource(abc.ABC):
    """Interface for conditional-independence backends."""

    @property
    @abc.abstractmethod
    def n_vars(self) -> int:
        """Number of variables the source answers queries about."""
        pass

    @property
    @abc.abstractmethod
    def names(self) -> Tuple[str, ...]:
        """Display names of the variables, position = index."""
        pass

    @abc.abstractmethod
    def test(self, x: int, y: int, z: AbstractSet[int]) -> CiResult:
        """
        Test whether x and y are independent given z.

        Args:
            x: First variable
            y: Second variable
            z: Conditioning set

        Returns:
            The test outcome
        """
        pass

    def independent(self, x: int, y: int, z: AbstractSet[int]) -> bool:
        """Shorthand for ``test(x, y, z).independent``."""
        return self.test(x, y, z).independent

    def check_query(self, x: int, y: int, z: AbstractSet[int]) -> None:
        """
        Validate query arguments.

        Raises:
            CiTestError: If a node is out of range, x == y, or x or y is in z
        """
        n = self.n_vars
        if x == y:
            raise CiTestError(f"Query needs two distinct variables, got {x} twice")
        if x in z or y in z:
            raise CiTestError(f"Conditioning set {sorted(z)} contains {x} or {y}")
        for v in (x, y, *z):
            if not 0 <= v < n:
                raise CiTestError(f"Variable {v} out of range for {n} variables")
