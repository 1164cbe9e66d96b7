"""
Structural complexity, iteration, extreme-case generators and successor cost instrumentation
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from config.config import ITERATION_BUDGET
from hbn import arith
from hbn.core import E, HBN, WNode, _to_int, apply_i, apply_o, blocks_of, succ
from hbn.errors import ResourceError

logger = logging.getLogger('hbn.complexity')


@dataclass
class OpStats:
    """Call counters for one measurement run; owned by a single thread"""
    op_label: str = "succ"
    succ_calls: int = 0
    pred_calls: int = 0
    operations: int = 0

    def record_succ(self):
        self.succ_calls += 1

    def record_pred(self):
        self.pred_calls += 1

    @property
    def total_calls(self) -> int:
        return self.succ_calls + self.pred_calls

    @property
    def average(self) -> float:
        return self.total_calls / self.operations if self.operations else 0.0

    def get_stats(self) -> Dict[str, Any]:
        return {
            'op': self.op_label,
            'operations': self.operations,
            'succ_calls': self.succ_calls,
            'pred_calls': self.pred_calls,
            'total_calls': self.total_calls,
            'average': self.average,
            'convention': "every succ/pred invocation, top-level call included",
        }


def tsize(x: HBN) -> HBN:
    """Node count of the tree, root excluded"""
    total = E
    for counter in blocks_of(x):
        total = succ(arith.add(total, tsize(counter)))
    return total


def _loop_count(k: HBN, budget: int, op: str) -> int:
    try:
        count = _to_int(k, budget.bit_length(), op)
    except ResourceError:
        count = budget + 1
    if count > budget:
        logger.warning(f"[boundary:error] {op} refused: iteration count past budget {budget}")
        raise ResourceError(op, "iteration count exceeds the iteration budget", budget)
    return count


def iterate(f: Callable[[HBN], HBN], k: HBN, x: HBN, budget: Optional[int] = None) -> HBN:
    budget = ITERATION_BUDGET if budget is None else budget
    for _ in range(_loop_count(k, budget, "iterate")):
        x = f(x)
    return x


def _wtree(x: HBN) -> HBN:
    return WNode(x)


def _io(x: HBN) -> HBN:
    return apply_i(apply_o(x))


def best_case(k: HBN) -> HBN:
    """Tower 2^2^..^2 - 2 of height k+1: one node per level"""
    return iterate(_wtree, k, E)


def worst_case(k: HBN) -> HBN:
    """4(4^k - 1)/3: alternating unit blocks, tsize equal to bitsize"""
    return iterate(_io, k, E)


def measure_succ_cost(range_end: int, budget: Optional[int] = None) -> OpStats:
    """Count succ/pred invocations while stepping through 0..range_end-1"""
    budget = ITERATION_BUDGET if budget is None else budget
    if range_end > budget:
        logger.warning(f"[boundary:error] measure_succ_cost refused: range {range_end} past budget {budget}")
        raise ResourceError("measure_succ_cost", f"range {range_end} exceeds the iteration budget", budget)
    stats = OpStats(op_label="succ")
    x = E
    for _ in range(range_end):
        x = succ(x, stats)
        stats.operations += 1
    logger.info(f"[signal] succ cost over {range_end} values: {stats.average:.4f} calls per successor")
    return stats
