import argparse
import logging
from pathlib import Path
from typing import Optional, Sequence

import orjson

from config.config import DIFFERENTIAL_BOUND, DIFFERENTIAL_SEED, DIFFERENTIAL_TRIALS, DIFFERENTIAL_WORKERS
from hbn import oracle

logger = logging.getLogger('hbn.check')

# exit code when the suite ran but found mismatches
MISMATCH_EXIT = 4


class Check:
    """`check` command: differential suite against plain int arithmetic"""
    name = "check"
    help = "compare tree arithmetic with int arithmetic"

    def __init__(self, app):
        self.app = app
        logger.debug("[init] Check command")

    def configure(self, parser: argparse.ArgumentParser):
        parser.add_argument("--ops", default="", help=f"comma separated subset of: {','.join(oracle.OPS)}")
        parser.add_argument("--bound", type=int, default=DIFFERENTIAL_BOUND, help="exhaustive range 0..BOUND")
        parser.add_argument("--trials", type=int, default=DIFFERENTIAL_TRIALS, help="random wide cases per op")
        parser.add_argument("--seed", type=int, default=DIFFERENTIAL_SEED)
        parser.add_argument("--workers", type=int, default=DIFFERENTIAL_WORKERS)
        parser.add_argument("--csv", type=Path, help="write mismatches as CSV to this path")
        parser.add_argument("--json", action="store_true", help="print a JSON summary")

    def check_command(self, ops: Optional[Sequence[str]] = None, bound: int = DIFFERENTIAL_BOUND,
                      trials: int = DIFFERENTIAL_TRIALS, seed: int = DIFFERENTIAL_SEED,
                      workers: int = DIFFERENTIAL_WORKERS) -> oracle.DifferentialReport:
        if bound < 0 or trials < 0:
            raise ValueError("bound and trials must be non-negative")
        return oracle.differential_suite(ops, bound, trials, seed, workers)

    def __call__(self, args: argparse.Namespace) -> int:
        ops = [op.strip() for op in args.ops.split(",") if op.strip()]
        report = self.check_command(ops, args.bound, args.trials, args.seed, args.workers)

        if args.csv:
            args.csv.write_text(report.to_csv(), encoding="utf-8")
            logger.info(f"[signal] Wrote {len(report.mismatches)} mismatches to {args.csv}")

        if args.json:
            summary = {
                'seed': report.seed, 'bound': report.bound, 'random_trials': report.random_trials,
                'ops': list(report.ops), 'checked': report.checked, 'elapsed_s': report.elapsed,
                'mismatches': [
                    {'op': m.op, 'inputs': list(m.inputs), 'expected': m.expected, 'got': m.got}
                    for m in report.mismatches
                ],
            }
            print(orjson.dumps(summary, option=orjson.OPT_INDENT_2).decode())
        else:
            print(report.to_text())
        return 0 if report.ok else MISMATCH_EXIT


def setup(app):
    app.add_command(Check(app))
