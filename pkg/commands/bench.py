import argparse
import enum
import logging
import os
import random
import time
import timeit
from typing import Any, Callable, Dict, List, Optional

import orjson
import psutil

from config.bench_profile import (BENCH_SEED, SUCC_AVG_BAND, SUCC_AVG_RANGE, TOWER_ADD_HEIGHTS,
                                  TOWER_MUL_HEIGHTS, VS_ORACLE_DENSE_BITS, VS_ORACLE_REPEAT,
                                  VS_ORACLE_TOWER_HEIGHT)
from hbn import arith, complexity, mul, oracle
from hbn.core import describe, from_natural, succ, to_natural
from utils.helpers import compared_dt, format_dt

logger = logging.getLogger('hbn.bench')


class Scenario(str, enum.Enum):
    succ_avg = "succ_avg"
    tower_add = "tower_add"
    tower_mul = "tower_mul"
    vs_oracle = "vs_oracle"


def _best_time(fn: Callable[[], Any], repeat: int) -> float:
    return min(timeit.repeat(fn, repeat=repeat, number=1))


class Bench:
    """`bench` command: successor cost, tower arithmetic and tree-vs-int timings"""
    name = "bench"
    help = "run a benchmark scenario"

    def __init__(self, app):
        self.app = app
        self._scenarios = {
            Scenario.succ_avg: self._succ_avg,
            Scenario.tower_add: self._tower_add,
            Scenario.tower_mul: self._tower_mul,
            Scenario.vs_oracle: self._vs_oracle,
        }
        logger.debug("[init] Bench command")

    def configure(self, parser: argparse.ArgumentParser):
        parser.add_argument("scenario", choices=[s.value for s in Scenario])
        parser.add_argument("scale", type=int, nargs="?", default=0,
                            help="scenario size; 0 uses the benchmark profile default")
        parser.add_argument("--seed", type=int, default=BENCH_SEED)
        parser.add_argument("--json", action="store_true", help="print the report as JSON")

    def bench_command(self, scenario: str, scale: int = 0, seed: int = BENCH_SEED) -> Dict[str, Any]:
        if scale < 0:
            raise ValueError("scale must be non-negative")
        scenario = Scenario(scenario)
        logger.info(f"[signal] Bench {scenario.value} starting (scale {scale or 'default'})")
        start = time.perf_counter()
        report = self._scenarios[scenario](scale, seed)
        elapsed = time.perf_counter() - start
        process = psutil.Process(os.getpid())
        report.update({
            'scenario': scenario.value,
            'seed': seed,
            'wall_time_s': elapsed,
            'wall_time': format_dt(elapsed),
            'rss_mb': round(process.memory_info().rss / (1024 * 1024), 1),
        })
        logger.info(f"[signal] Bench {scenario.value} finished in {format_dt(elapsed)}")
        return report

    def _succ_avg(self, scale: int, seed: int) -> Dict[str, Any]:
        range_end = scale or SUCC_AVG_RANGE
        stats = complexity.measure_succ_cost(range_end)
        low, high = SUCC_AVG_BAND
        return {
            'range': range_end,
            **stats.get_stats(),
            'band': [low, high],
            'within_band': low <= stats.average <= high,
        }

    def _tower_heights(self, scale: int, default) -> List[int]:
        return list(default) if not scale else [scale, scale + 10]

    def _tower_add(self, scale: int, seed: int) -> Dict[str, Any]:
        a, b = self._tower_heights(scale, TOWER_ADD_HEIGHTS)
        start = time.perf_counter()
        total = arith.add(complexity.best_case(from_natural(a)), complexity.best_case(from_natural(b)))
        size = complexity.tsize(total)
        elapsed = time.perf_counter() - start
        return {'expression': f"tsize(best({a}) + best({b}))", 'tsize': describe(size),
                'op_time': format_dt(elapsed)}

    def _tower_mul(self, scale: int, seed: int) -> Dict[str, Any]:
        a, b = self._tower_heights(scale, TOWER_MUL_HEIGHTS)
        start = time.perf_counter()
        product = mul.mul(succ(complexity.best_case(from_natural(a))),
                          succ(complexity.best_case(from_natural(b))))
        size = complexity.tsize(product)
        elapsed = time.perf_counter() - start
        return {'expression': f"tsize((best({a})+1) * (best({b})+1))", 'tsize': describe(size),
                'op_time': format_dt(elapsed)}

    def _vs_oracle(self, scale: int, seed: int) -> Dict[str, Any]:
        bits = scale or VS_ORACLE_DENSE_BITS
        rng = random.Random(seed)
        dense = [rng.getrandbits(bits) for _ in range(2)]
        height = VS_ORACLE_TOWER_HEIGHT
        towers = [to_natural(complexity.best_case(from_natural(h))) for h in (height, height - 1)]

        rows = []
        for shape, (x, y) in (("dense", dense), ("tower", towers)):
            x, y = max(x, y), min(x, y)
            tx, ty = from_natural(x), from_natural(y)
            ops = [
                ("add", lambda: arith.add(tx, ty), lambda: x + y),
                ("sub", lambda: arith.sub(tx, ty), lambda: x - y),
                ("mul", lambda: mul.mul(tx, ty), lambda: x * y),
                ("cmp", lambda: arith.cmp(tx, ty), lambda: x < y),
            ]
            if shape == "dense":
                ops.append(("add_digitwise", lambda: oracle.add_digitwise(tx, ty), lambda: x + y))
            for op, tree_fn, int_fn in ops:
                tree_t = _best_time(tree_fn, VS_ORACLE_REPEAT)
                int_t = _best_time(int_fn, VS_ORACLE_REPEAT)
                rows.append({'shape': shape, 'op': op, 'tree': format_dt(tree_t), 'int': format_dt(int_t),
                             'tree_vs_int': compared_dt(tree_t, int_t)})
        return {'dense_bits': bits, 'tower_height': height, 'repeat': VS_ORACLE_REPEAT, 'rows': rows}

    def render(self, report: Dict[str, Any]) -> str:
        lines = [f"bench {report['scenario']} (seed {report['seed']})"]
        rows: Optional[List[Dict]] = report.get('rows')
        for key, value in report.items():
            if key in ('scenario', 'seed', 'rows', 'wall_time_s'):
                continue
            if isinstance(value, float):
                value = f"{value:.4f}"
            lines.append(f"  {key}: {value}")
        if rows:
            lines.append(f"  {'shape':<6} {'op':<14} {'tree':>10} {'int':>10}  tree vs int")
            for row in rows:
                lines.append(f"  {row['shape']:<6} {row['op']:<14} {row['tree']:>10} {row['int']:>10}  "
                             f"{row['tree_vs_int']}")
        return "\n".join(lines)

    def __call__(self, args: argparse.Namespace) -> int:
        report = self.bench_command(args.scenario, args.scale, args.seed)
        if args.json:
            print(orjson.dumps(report, option=orjson.OPT_INDENT_2).decode())
        else:
            print(self.render(report))
        return 0


def setup(app):
    app.add_command(Bench(app))
