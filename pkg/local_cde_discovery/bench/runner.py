# Location: local_cde_discovery/bench/runner.py
"""
Benchmark Runner

Runs the synthetic sweep: for every (size, replicate) an instance is drawn,
simulated, and handed to each algorithm through a fresh counted CI source.
Replicates run in a thread pool; records are merged in a fixed order so a
sweep is reproducible regardless of scheduling.
"""

import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from local_cde_discovery.bench.metrics import f1_parents
from local_cde_discovery.ci.counted import CountedCi
from local_cde_discovery.ci.fisher_z import FisherZ
from local_cde_discovery.ci.g_square import GSquare
from local_cde_discovery.ci.oracle import OracleCi
from local_cde_discovery.core.config import DiscoveryConfig
from local_cde_discovery.core.exceptions import ConfigurationError, DatasetError
from local_cde_discovery.datagen.graphs import BenchInstance, gen_instance
from local_cde_discovery.datagen.scm import ScmKind, simulate
from local_cde_discovery.discovery.locpc_cde import loc_pc_cde
from local_cde_discovery.discovery.pc import pc_baseline
from local_cde_discovery.interfaces.ci_source import CiSource
from local_cde_discovery.local.noc import cde_identifiable_from_graph
from local_cde_discovery.utils.async_utils import run_sync_in_executor

logger = logging.getLogger(__name__)

ALGORITHMS = ("locpc_cde", "pc")
RESULT_COLUMNS = (
    "algorithm",
    "n_vars",
    "replicate",
    "ci_count",
    "verdict_correct",
    "f1",
    "wall_ms",
)


@dataclass
class BenchConfig:
    """Sweep parameters."""

    sizes: List[int] = field(default_factory=lambda: [10, 20, 50])
    reps: int = 20
    setting: str = "linear"  # linear | binary
    identifiable: bool = True
    alpha: float = 0.05
    n_samples: int = 5000
    algorithms: List[str] = field(default_factory=lambda: list(ALGORITHMS))
    seed: int = 42
    oracle: bool = False
    workers: int = 4
    max_draws: int = 10000
    record_timing: bool = True
    condition_limit: float = 1e12
    g2_samples_per_df: int = 10

    def validate(self) -> None:
        """
        Check value ranges.

        Raises:
            ConfigurationError: If any value is out of range
        """
        if not self.sizes or any(n < 3 for n in self.sizes):
            raise ConfigurationError(f"Sizes must be nonempty and >= 3: {self.sizes}")
        if self.reps < 1:
            raise ConfigurationError(f"reps must be >= 1, got {self.reps}")
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.setting not in ("linear", "binary"):
            raise ConfigurationError(f"Unknown setting: {self.setting}")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or not self.algorithms:
            raise ConfigurationError(f"Unknown or missing algorithms: {unknown}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")

    @property
    def kind(self) -> ScmKind:
        if self.setting == "binary":
            return ScmKind.BINARY_LOGISTIC
        return ScmKind.LINEAR_GAUSSIAN

    @classmethod
    def from_config(cls, config: DiscoveryConfig, **overrides: Any) -> "BenchConfig":
        """Defaults taken from the discovery configuration, then overrides."""
        bench = cls(
            sizes=list(config.bench_sizes),
            reps=config.bench_reps,
            setting="binary" if config.ci_kind == "binary" else "linear",
            alpha=config.alpha,
            n_samples=config.n_samples,
            seed=config.seed,
            workers=config.workers,
            max_draws=config.max_draws,
            condition_limit=config.condition_limit,
            g2_samples_per_df=config.g2_samples_per_df,
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(bench, key, value)
        return bench


@dataclass
class BenchRecord:
    """One algorithm's outcome on one replicate."""

    algorithm: str
    n_vars: int
    replicate: int
    ci_count: int
    verdict_correct: bool
    f1: Optional[float]
    wall_ms: float
    error: Optional[str] = None

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.n_vars, self.replicate, ALGORITHMS.index(self.algorithm))

    def to_row(self) -> Dict[str, str]:
        return {
            "algorithm": self.algorithm,
            "n_vars": str(self.n_vars),
            "replicate": str(self.replicate),
            "ci_count": str(self.ci_count),
            "verdict_correct": str(self.verdict_correct).lower(),
            "f1": "" if self.f1 is None else f"{self.f1:.6f}",
            "wall_ms": f"{self.wall_ms:.3f}",
        }

    @classmethod
    def from_row(cls, row: Dict[str, str]) -> "BenchRecord":
        return cls(
            algorithm=row["algorithm"],
            n_vars=int(row["n_vars"]),
            replicate=int(row["replicate"]),
            ci_count=int(row["ci_count"]),
            verdict_correct=row["verdict_correct"].strip().lower() == "true",
            f1=float(row["f1"]) if row["f1"] else None,
            wall_ms=float(row["wall_ms"]),
        )


def make_ci_source(cfg: BenchConfig, instance: BenchInstance) -> CiSource:
    """The CI backend a replicate uses: oracle, Fisher-z or G-square."""
    if cfg.oracle:
        return OracleCi(instance.scm.dag)
    data = simulate(instance.scm, cfg.n_samples)
    if cfg.kind is ScmKind.BINARY_LOGISTIC:
        return GSquare(data, cfg.alpha, cfg.g2_samples_per_df)
    return FisherZ(data, cfg.alpha, cfg.condition_limit)


def _score(
    algorithm: str, source: CiSource, instance: BenchInstance
) -> Tuple[int, bool, Optional[float]]:
    g = instance.scm.dag
    x, y = instance.treatment, instance.target
    counted = CountedCi(source)
    if algorithm == "locpc_cde":
        report = loc_pc_cde(counted, g.n, x, y)
        verdict, estimated = report.identifiable, report.adjustment_set
    else:
        cpdag = pc_baseline(counted, g.n)
        verdict = cde_identifiable_from_graph(cpdag, y)
        estimated = cpdag.parents(y) if verdict else None
    f1 = None
    if instance.identifiable and verdict and estimated is not None:
        f1 = f1_parents(estimated, g.parents(y))
    return counted.count, verdict == instance.identifiable, f1


def run_replicate(
    cfg: BenchConfig, n_vars: int, replicate: int, seed: np.random.SeedSequence
) -> List[BenchRecord]:
    """
    Run every configured algorithm on one replicate.

    Failures are caught and recorded as incorrect verdicts.

    Returns:
        One record per algorithm
    """
    records: List[BenchRecord] = []
    try:
        instance = gen_instance(
            n_vars, cfg.identifiable, seed, cfg.kind, cfg.max_draws
        )
        source = make_ci_source(cfg, instance)
    except Exception as e:
        logger.error(f"Replicate {replicate} at n={n_vars} failed to set up: {e}")
        return [
            BenchRecord(name, n_vars, replicate, 0, False, None, 0.0, str(e))
            for name in cfg.algorithms
        ]

    for name in cfg.algorithms:
        start = time.perf_counter()
        try:
            ci_count, correct, f1 = _score(name, source, instance)
            error = None
        except Exception as e:
            logger.error(f"{name} failed on replicate {replicate} at n={n_vars}: {e}")
            ci_count, correct, f1, error = 0, False, None, str(e)
        elapsed = (time.perf_counter() - start) * 1000 if cfg.record_timing else 0.0
        records.append(
            BenchRecord(name, n_vars, replicate, ci_count, correct, f1, elapsed, error)
        )
    return records


async def run_benchmark_async(cfg: BenchConfig) -> List[BenchRecord]:
    """
    Run the sweep with replicates spread over a thread pool.

    Args:
        cfg: Sweep parameters

    Returns:
        Records ordered by (n_vars, replicate, algorithm)
    """
    cfg.validate()
    streams = np.random.SeedSequence(cfg.seed).spawn(len(cfg.sizes) * cfg.reps)
    jobs = [
        (n_vars, rep, streams[i * cfg.reps + rep])
        for i, n_vars in enumerate(cfg.sizes)
        for rep in range(cfg.reps)
    ]
    logger.info(
        f"Benchmark: {len(jobs)} replicates, algorithms {cfg.algorithms}, "
        f"{cfg.workers} workers"
    )
    with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        batches = await asyncio.gather(
            *(
                run_sync_in_executor(
                    run_replicate, cfg, n_vars, rep, stream, executor=executor
                )
                for n_vars, rep, stream in jobs
            )
        )
    records = [record for batch in batches for record in batch]
    records.sort(key=lambda r: r.key)
    failed = sum(1 for r in records if r.error)
    if failed:
        logger.warning(f"{failed} of {len(records)} benchmark records failed")
    return records


def run_benchmark(cfg: BenchConfig) -> List[BenchRecord]:
    """Synchronous entry point for ``run_benchmark_async``."""
    return asyncio.run(run_benchmark_async(cfg))


def write_records(records: Sequence[BenchRecord], path: Union[str, Path]) -> None:
    """Write records as CSV with the fixed result columns."""
    frame = pd.DataFrame([r.to_row() for r in records], columns=list(RESULT_COLUMNS))
    frame.to_csv(path, index=False, lineterminator="\n")


def read_records(path: Union[str, Path]) -> List[BenchRecord]:
    """
    Read a results CSV.

    Raises:
        DatasetError: If the file cannot be read or lacks the result columns
    """
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DatasetError(f"Cannot read {path}: {e}") from e
    if tuple(frame.columns) != RESULT_COLUMNS:
        raise DatasetError(
            f"{path} does not have the result columns {','.join(RESULT_COLUMNS)}"
        )
    return [BenchRecord.from_row(row) for row in frame.to_dict(orient="records")]
