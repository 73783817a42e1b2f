# Location: local_cde_discovery/datagen/scm.py
"""
Structural Causal Models

Random linear-Gaussian and binary-logistic models over a DAG, and sample
simulation by forward substitution in topological order.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Union

import numpy as np
from scipy.special import expit

from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.graphs.dag import Dag, Edge

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]

COEFFICIENT_FLOOR = 0.2
LINEAR_CEILING = 1.0
BINARY_CEILING = 5.0
NOISE_VARIANCE_RANGE = (0.8, 1.0)


class ScmKind(enum.Enum):
    """Functional form of every structural equation."""

    LINEAR_GAUSSIAN = "linear"
    BINARY_LOGISTIC = "binary"

    @property
    def data_kind(self) -> DataKind:
        if self is ScmKind.BINARY_LOGISTIC:
            return DataKind.BINARY
        return DataKind.CONTINUOUS


@dataclass(frozen=True)
class ScmSpec:
    """A DAG with edge coefficients, noise variances and a sampling seed."""

    dag: Dag
    kind: ScmKind
    coefficients: Dict[Edge, float]
    noise_variances: Dict[int, float] = field(default_factory=dict)
    seed: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view keyed by node display names."""
        names = self.dag.names
        return {
            "kind": self.kind.value,
            "seed": self.seed,
            "coefficients": [
                {"tail": names[a], "head": names[b], "value": value}
                for (a, b), value in sorted(self.coefficients.items())
            ],
            "noise_variances": {
                names[v]: value for v, value in sorted(self.noise_variances.items())
            },
        }


def random_scm(g: Dag, kind: ScmKind, seed: SeedLike) -> ScmSpec:
    """
    Draw coefficients, noise variances and a sampling seed for ``g``.

    Coefficient magnitudes are uniform on [0.2, 1] (linear) or [0.2, 5]
    (binary) with a random sign; noise variances are uniform on [0.8, 1].

    Args:
        g: The DAG
        kind: Equation form
        seed: Seed, seed sequence or generator

    Returns:
        The structural causal model
    """
    rng = np.random.default_rng(seed)
    ceiling = BINARY_CEILING if kind is ScmKind.BINARY_LOGISTIC else LINEAR_CEILING
    coefficients: Dict[Edge, float] = {}
    for edge in sorted(g.edges):
        sign = rng.choice((-1.0, 1.0))
        coefficients[edge] = float(sign * rng.uniform(COEFFICIENT_FLOOR, ceiling))
    noise: Dict[int, float] = {}
    if kind is ScmKind.LINEAR_GAUSSIAN:
        noise = {v: float(rng.uniform(*NOISE_VARIANCE_RANGE)) for v in range(g.n)}
    sample_seed = int(rng.integers(0, 2**63 - 1))
    return ScmSpec(g, kind, coefficients, noise, sample_seed)


def simulate(spec: ScmSpec, n_samples: int) -> Dataset:
    """
    Sample ``n_samples`` rows from the model.

    Linear models add Gaussian noise to the weighted parent sum. Binary
    models set a node to 1 when a uniform draw falls at or below the
    logistic of the weighted parent sum. Identical inputs give identical
    datasets.

    Args:
        spec: The model
        n_samples: Number of rows, at least 1

    Returns:
        The simulated dataset

    Raises:
        ValueError: If n_samples is not positive
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    g = spec.dag
    rng = np.random.default_rng(spec.seed)
    values = np.zeros((n_samples, g.n), dtype=np.float64)

    for v in g.topological_order():
        drive = np.zeros(n_samples)
        for u in sorted(g.parents(v)):
            drive += spec.coefficients[(u, v)] * values[:, u]
        if spec.kind is ScmKind.LINEAR_GAUSSIAN:
            scale = np.sqrt(spec.noise_variances.get(v, 1.0))
            values[:, v] = drive + rng.normal(0.0, scale, n_samples)
        else:
            values[:, v] = rng.random(n_samples) <= expit(drive)

    logger.debug(f"Simulated {n_samples} {spec.kind.value} samples over {g.n} nodes")
    return Dataset(values, spec.kind.data_kind, g.names)
