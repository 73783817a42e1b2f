"""
Desk-Scale Benchmark Reproduction Script

Runs the synthetic sweep comparing LocPC-CDE with global PC for one or both
data settings, then writes the per-replicate results and their summaries.

Usage: python scripts/reproduce_desk_benchmark.py [--setting linear|binary|both]
       [--non-identifiable] [--sizes 10,20,50] [--reps 20] [--oracle]
       [--out-dir results]
"""

import argparse
import sys
import time
from pathlib import Path

from local_cde_discovery.bench.runner import BenchConfig, run_benchmark, write_records
from local_cde_discovery.bench.summary import summarize, write_summary
from local_cde_discovery.core.config import load_config
from local_cde_discovery.core.exceptions import LocalCdeError
from local_cde_discovery.utils.logging import setup_logging

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.resolve()
DEFAULT_OUT_DIR = PROJECT_ROOT / "results"


def run_setting(setting: str, args: argparse.Namespace, out_dir: Path) -> bool:
    """Runs one setting and writes its results; returns True on success."""
    label = "identifiable" if args.identifiable else "non_identifiable"
    results = out_dir / f"{setting}_{label}.csv"
    summary = out_dir / f"{setting}_{label}_summary.csv"
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"\n▶️ Running {setting} / {label}: sizes {sizes}, {args.reps} reps")
    started = time.perf_counter()
    try:
        cfg = BenchConfig.from_config(
            load_config(),
            sizes=sizes,
            reps=args.reps,
            setting=setting,
            identifiable=args.identifiable,
            oracle=args.oracle,
            workers=args.workers,
            record_timing=not args.no_timing,
        )
        records = run_benchmark(cfg)
        write_records(records, results)
        write_summary(summarize(records), summary)
    except LocalCdeError as e:
        print(f"❌ {setting} failed: {e}")
        return False

    failed = sum(1 for r in records if r.error)
    elapsed = time.perf_counter() - started
    print(f"✅ {len(records)} records in {elapsed:.1f}s ({failed} failed)")
    print(f"   Results: {results}")
    print(f"   Summary: {summary}")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description="Reproduce the desk-scale sweep.")
    parser.add_argument(
        "--setting", choices=("linear", "binary", "both"), default="both"
    )
    parser.add_argument(
        "--non-identifiable", dest="identifiable", action="store_false"
    )
    parser.add_argument("--sizes", default="10,20,50")
    parser.add_argument("--reps", type=int, default=20)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--oracle", action="store_true")
    parser.add_argument("--no-timing", action="store_true")
    parser.add_argument("--out-dir", type=Path, default=DEFAULT_OUT_DIR)
    args = parser.parse_args()

    setup_logging()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    settings = ("linear", "binary") if args.setting == "both" else (args.setting,)

    ok = all([run_setting(setting, args, args.out_dir) for setting in settings])
    if ok:
        print("\n🎉 Benchmark finished.")
        return 0
    print("\n⚠️ Some settings failed; see the log above.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
