# Location: local_cde_discovery/bench/summary.py
"""
Benchmark Summaries

Per (algorithm, size) aggregates of a sweep: mean CI tests with a 1.96 sd
band, the proportion of correct verdicts and the mean parent-set F1.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from local_cde_discovery.bench.runner import ALGORITHMS, BenchRecord

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ("algorithm", "n_vars", "reps", "ci_mean", "ci_band", "tpr", "f1")
FAILURE_NOTE = "failed replicates count as incorrect verdicts"


def summarize(records: Sequence[BenchRecord]) -> List[Dict[str, Any]]:
    """
    Aggregate records per (algorithm, n_vars).

    The band is 1.96 times the sample standard deviation (0 for one record).
    ``f1`` is left out of a row when no record in it has an F1 score.

    Args:
        records: Benchmark records, nonempty

    Returns:
        Summary rows ordered by size, then algorithm

    Raises:
        ValueError: If records is empty
    """
    if not records:
        raise ValueError("Nothing to summarize")
    groups: Dict[Tuple[int, str], List[BenchRecord]] = {}
    for record in records:
        groups.setdefault((record.n_vars, record.algorithm), []).append(record)

    rows: List[Dict[str, Any]] = []
    for (n_vars, algorithm), group in sorted(groups.items(), key=_group_order):
        counts = np.array([r.ci_count for r in group], dtype=float)
        sd = float(np.std(counts, ddof=1)) if len(counts) > 1 else 0.0
        row: Dict[str, Any] = {
            "algorithm": algorithm,
            "n_vars": n_vars,
            "reps": len(group),
            "ci_mean": float(np.mean(counts)),
            "ci_band": 1.96 * sd,
            "tpr": sum(r.verdict_correct for r in group) / len(group),
        }
        scores = [r.f1 for r in group if r.f1 is not None]
        if scores:
            row["f1"] = float(np.mean(scores))
        rows.append(row)
    return rows


def _group_order(item: Tuple[Tuple[int, str], Any]) -> Tuple[int, int, str]:
    (n_vars, algorithm), _ = item
    rank = ALGORITHMS.index(algorithm) if algorithm in ALGORITHMS else len(ALGORITHMS)
    return n_vars, rank, algorithm


def write_summary(rows: Sequence[Dict[str, Any]], path: Union[str, Path]) -> Path:
    """
    Write the summary as CSV and as JSON next to it.

    Args:
        rows: Output of ``summarize``
        path: CSV path; the JSON file gets the same stem

    Returns:
        Path of the JSON file
    """
    csv_path = Path(path)
    frame = pd.DataFrame(list(rows), columns=list(SUMMARY_COLUMNS))
    frame.to_csv(csv_path, index=False, lineterminator="\n", float_format="%.6g")

    json_path = csv_path.with_suffix(".json")
    payload = {"note": FAILURE_NOTE, "rows": list(rows)}
    json_path.write_text(json.dumps(payload, indent=2) + "\n")
    logger.info(f"Summary of {len(rows)} groups written to {csv_path} and {json_path}")
    return json_path
