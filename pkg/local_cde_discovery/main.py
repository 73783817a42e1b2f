#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Location: local_cde_discovery/main.py
"""
Local CDE Discovery - Command Line Entry Point

Sub-commands build oracle LEGs, run LocPC-CDE on a CSV dataset, generate
benchmark instances, run the synthetic sweep and summarize its results.
Command output goes to stdout; logs go to stderr.
"""

import argparse
import json
import sys
from contextlib import ExitStack
from typing import List, Optional, Sequence

from local_cde_discovery import APP_NAME, __version__
from local_cde_discovery.bench.runner import (
    ALGORITHMS,
    BenchConfig,
    read_records,
    run_benchmark,
    write_records,
)
from local_cde_discovery.bench.summary import summarize, write_summary
from local_cde_discovery.ci.counted import CountedCi
from local_cde_discovery.ci.dataset import DataKind, Dataset
from local_cde_discovery.ci.fisher_z import FisherZ
from local_cde_discovery.ci.g_square import GSquare
from local_cde_discovery.core.config import DiscoveryConfig, load_config
from local_cde_discovery.core.exceptions import LocalCdeError
from local_cde_discovery.datagen.graphs import gen_instance
from local_cde_discovery.datagen.scm import ScmKind, simulate
from local_cde_discovery.discovery.background import BackgroundKnowledge
from local_cde_discovery.discovery.locpc_cde import loc_pc_cde
from local_cde_discovery.graphs.io import format_leg, read_dag, write_dag
from local_cde_discovery.interfaces.ci_source import CiSource
from local_cde_discovery.local.leg_builder import build_true_leg
from local_cde_discovery.local.noc import grow_noc_candidate, noc_satisfied
from local_cde_discovery.utils.logging import get_logger, setup_logging

logger = get_logger(__name__)


def _sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"Expected comma-separated sizes: {text}"
        ) from None


def _algorithms(text: str) -> List[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    unknown = set(names) - set(ALGORITHMS)
    if unknown:
        raise argparse.ArgumentTypeError(f"Unknown algorithms: {sorted(unknown)}")
    return names


def _add_identifiability(parser: argparse.ArgumentParser, required: bool) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--identifiable", dest="identifiable", action="store_true")
    group.add_argument(
        "--non-identifiable", dest="identifiable", action="store_false"
    )
    parser.set_defaults(identifiable=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="local-cde",
        description=f"{APP_NAME}: local causal discovery and CDE identifiability",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-file", help="Also write logs to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    oracle = commands.add_parser("oracle-leg", help="LEG of a known DAG")
    oracle.add_argument("--dag", required=True, help="DAG file")
    oracle.add_argument("--target", required=True, help="Target name or index")
    oracle.add_argument("--hop", type=int, default=1, help="Hop count")
    oracle.add_argument(
        "--check-noc",
        action="store_true",
        help="Also print the grown NOC candidate and its verdict",
    )

    discover = commands.add_parser("discover", help="LocPC-CDE on a CSV dataset")
    discover.add_argument("--data", required=True, help="CSV with a header row")
    discover.add_argument("--target", required=True, help="Target column")
    discover.add_argument("--treatment", required=True, help="Treatment column")
    discover.add_argument("--alpha", type=float, help="Significance level")
    discover.add_argument("--kind", choices=("continuous", "binary"))
    discover.add_argument("--bk", help="Background-knowledge file")
    discover.add_argument("--audit", help="Write one line per CI query here")
    discover.add_argument(
        "--no-noc-stop",
        action="store_true",
        help="Do not stop early on the non-orientability criterion",
    )

    generate = commands.add_parser("generate", help="Draw a benchmark instance")
    generate.add_argument("--n-vars", type=int, default=50)
    generate.add_argument("--setting", choices=("linear", "binary"), default="linear")
    _add_identifiability(generate, required=True)
    generate.add_argument("--samples", type=int)
    generate.add_argument("--seed", type=int)
    generate.add_argument("--out-dag", required=True)
    generate.add_argument("--out-data", required=True)
    generate.add_argument("--out-meta", required=True)

    bench = commands.add_parser("bench", help="Run the synthetic sweep")
    bench.add_argument("--setting", choices=("linear", "binary"), default="linear")
    _add_identifiability(bench, required=False)
    bench.add_argument("--sizes", type=_sizes)
    bench.add_argument("--reps", type=int)
    bench.add_argument("--alpha", type=float)
    bench.add_argument("--samples", type=int)
    bench.add_argument("--seed", type=int)
    bench.add_argument("--workers", type=int)
    bench.add_argument("--algorithms", type=_algorithms)
    bench.add_argument("--oracle", action="store_true", help="Use d-separation")
    bench.add_argument(
        "--no-timing", action="store_true", help="Write wall_ms as 0"
    )
    bench.add_argument("--out", required=True, help="Results CSV")

    summary = commands.add_parser("summarize", help="Summarize a results CSV")
    summary.add_argument("--in", dest="input", required=True)
    summary.add_argument("--out", required=True)
    return parser


def cmd_oracle_leg(args: argparse.Namespace, config: DiscoveryConfig) -> int:
    g = read_dag(args.dag)
    y = g.node(args.target)
    leg = build_true_leg(g, y, args.hop)
    sys.stdout.write(format_leg(leg))
    if args.check_noc:
        candidate = grow_noc_candidate(leg, {y})
        verdict = noc_satisfied(leg, candidate)
        print(f"noc_candidate: {','.join(g.names[v] for v in sorted(candidate))}")
        print(f"noc_satisfied: {str(verdict).lower()}")
    return 0


def _ci_source(data: Dataset, alpha: float, config: DiscoveryConfig) -> CiSource:
    if data.kind is DataKind.BINARY:
        return GSquare(data, alpha, config.g2_samples_per_df)
    return FisherZ(data, alpha, config.condition_limit)


def cmd_discover(args: argparse.Namespace, config: DiscoveryConfig) -> int:
    kind = DataKind(args.kind or config.ci_kind)
    alpha = args.alpha if args.alpha is not None else config.alpha
    data = Dataset.from_csv(args.data, kind)
    y, x = data.node(args.target), data.node(args.treatment)
    bk = BackgroundKnowledge.from_file(args.bk, data.names) if args.bk else None

    with ExitStack() as stack:
        audit = stack.enter_context(open(args.audit, "w")) if args.audit else None
        source = CountedCi(_ci_source(data, alpha, config), audit)
        report = loc_pc_cde(
            source,
            data.n_vars,
            x,
            y,
            bk=bk,
            check_noc=not args.no_noc_stop,
            warn_size=config.subset_warn_size,
        )

    print(json.dumps(report.to_dict(), indent=2))
    sys.stdout.write(format_leg(report.leg))
    return 0


def cmd_generate(args: argparse.Namespace, config: DiscoveryConfig) -> int:
    kind = ScmKind(args.setting)
    seed = args.seed if args.seed is not None else config.seed
    samples = args.samples if args.samples is not None else config.n_samples
    instance = gen_instance(
        args.n_vars, args.identifiable, seed, kind, config.max_draws
    )
    write_dag(args.out_dag, instance.scm.dag)
    simulate(instance.scm, samples).to_csv(args.out_data)
    with open(args.out_meta, "w") as f:
        json.dump(instance.to_dict(), f, indent=2)
        f.write("\n")
    logger.info(
        f"Instance written: treatment {instance.treatment}, target "
        f"{instance.target}, {instance.draws} draws"
    )
    return 0


def cmd_bench(args: argparse.Namespace, config: DiscoveryConfig) -> int:
    cfg = BenchConfig.from_config(
        config,
        sizes=args.sizes,
        reps=args.reps,
        setting=args.setting,
        identifiable=args.identifiable,
        alpha=args.alpha,
        n_samples=args.samples,
        seed=args.seed,
        workers=args.workers,
        algorithms=args.algorithms,
        oracle=args.oracle,
        record_timing=not args.no_timing,
    )
    records = run_benchmark(cfg)
    write_records(records, args.out)
    print(f"Wrote {len(records)} records to {args.out}")
    return 0


def cmd_summarize(args: argparse.Namespace, config: DiscoveryConfig) -> int:
    rows = summarize(read_records(args.input))
    json_path = write_summary(rows, args.out)
    print(f"Wrote {len(rows)} summary rows to {args.out} and {json_path}")
    return 0


COMMANDS = {
    "oracle-leg": cmd_oracle_leg,
    "discover": cmd_discover,
    "generate": cmd_generate,
    "bench": cmd_bench,
    "summarize": cmd_summarize,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the command line."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level, args.log_file)
    try:
        config = load_config()
        if args.log_level is None:
            setup_logging(config.log_level, args.log_file)
        logger.debug(f"Running {args.command}")
        return COMMANDS[args.command](args, config)
    except LocalCdeError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1
    except Exception as e:
        logger.exception(f"Fatal error: {str(e)}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
