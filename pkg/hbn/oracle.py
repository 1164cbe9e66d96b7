"""
Reference implementations over plain ints plus the differential harness that
checks the tree arithmetic against them.
"""
import csv
import io
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from config.config import (DIFFERENTIAL_BOUND, DIFFERENTIAL_SEED, DIFFERENTIAL_TRIALS,
                           DIFFERENTIAL_WORKERS, EXP2_ORACLE_LIMIT, MUL_OPERAND_BITS,
                           RANDOM_OPERAND_BITS, SHIFT_ORACLE_LIMIT)
from hbn import arith, mul
from hbn.core import (HBN, Leaf, VNode, apply_i, apply_o, from_natural, pred,
                      render_tree, succ, to_natural, unapply_i, unapply_o)
from hbn.errors import HBNError, UnderflowError

logger = logging.getLogger('hbn.oracle')


def nat_o_iter(n: int, k: int) -> int:
    """o applied n times to k"""
    return ((k + 1) << n) - 1


def nat_i_iter(n: int, k: int) -> int:
    """i applied n times to k"""
    return ((k + 2) << n) - 2


# digit-at-a-time baseline: peel one o/i digit off each operand per step

def _peel(x: HBN) -> Tuple[bool, HBN]:
    if isinstance(x, VNode):
        return True, unapply_o(x)
    return False, unapply_i(x)


def add_digitwise(x: HBN, y: HBN) -> HBN:
    pending: List[Callable[[HBN], HBN]] = []
    while not isinstance(x, Leaf) and not isinstance(y, Leaf):
        x_odd, x = _peel(x)
        y_odd, y = _peel(y)
        if x_odd and y_odd:
            pending.append(apply_i)
        elif x_odd or y_odd:
            pending.append(lambda s: apply_o(succ(s)))
        else:
            pending.append(lambda s: apply_i(succ(s)))
    total = y if isinstance(x, Leaf) else x
    for finish in reversed(pending):
        total = finish(total)
    return total


def sub_digitwise(x: HBN, y: HBN) -> HBN:
    """x - y for x >= y"""
    if arith.cmp(x, y) is arith.Ordering.LT:
        raise UnderflowError("sub_digitwise", f"{render_tree(x)} < {render_tree(y)}")
    pending: List[Callable[[HBN], HBN]] = []
    while not isinstance(y, Leaf):
        x_odd, x = _peel(x)
        y_odd, y = _peel(y)
        if x_odd == y_odd:
            pending.append(lambda d: pred(apply_o(d)))
        elif x_odd:
            pending.append(lambda d: pred(pred(apply_o(d))))
        else:
            pending.append(apply_o)
    diff = x
    for finish in reversed(pending):
        diff = finish(diff)
    return diff


def _nat_bitsize(k: int) -> int:
    return (k + 1).bit_length() - 1


def _nat_cmp(a: int, b: int) -> str:
    return "<" if a < b else (">" if a > b else "=")


def _project(value) -> str:
    if isinstance(value, arith.Ordering):
        return value.value
    return str(to_natural(value))


@dataclass(frozen=True)
class OracleOp:
    name: str
    arity: int
    tree_fn: Callable[..., object]
    nat_fn: Callable[..., object]
    pre: Callable[..., bool] = lambda *args: True
    sample: Optional[Callable[[random.Random, int], Tuple[int, ...]]] = None
    operand_bits: int = RANDOM_OPERAND_BITS

    def draw(self, rng: random.Random, bits: int) -> Tuple[int, ...]:
        if self.sample is not None:
            return self.sample(rng, bits)
        return tuple(rng.getrandbits(bits) for _ in range(self.arity))


def _ordered_pair(rng: random.Random, bits: int) -> Tuple[int, int]:
    a, b = rng.getrandbits(bits), rng.getrandbits(bits)
    return (a, b) if a >= b else (b, a)


OPS: Dict[str, OracleOp] = {op.name: op for op in (
    OracleOp("succ", 1, succ, lambda a: a + 1),
    OracleOp("pred", 1, pred, lambda a: a - 1, pre=lambda a: a > 0),
    OracleOp("add", 2, arith.add, lambda a, b: a + b),
    OracleOp("sub", 2, arith.sub, lambda a, b: a - b, pre=lambda a, b: a >= b,
             sample=_ordered_pair),
    OracleOp("mul", 2, mul.mul, lambda a, b: a * b, operand_bits=MUL_OPERAND_BITS),
    OracleOp("cmp", 2, arith.cmp, _nat_cmp),
    OracleOp("double", 1, arith.double, lambda a: 2 * a),
    OracleOp("half", 1, arith.half, lambda a: a // 2, pre=lambda a: a % 2 == 0,
             sample=lambda rng, bits: (rng.getrandbits(bits) & ~1,)),
    OracleOp("exp2", 1, arith.exp2, lambda a: 1 << a, pre=lambda a: a <= EXP2_ORACLE_LIMIT,
             sample=lambda rng, bits: (rng.randrange(EXP2_ORACLE_LIMIT + 1),)),
    OracleOp("left_shift", 2, arith.left_shift, lambda n, k: k << n,
             pre=lambda n, k: n <= SHIFT_ORACLE_LIMIT,
             sample=lambda rng, bits: (rng.randrange(SHIFT_ORACLE_LIMIT + 1), rng.getrandbits(bits))),
    OracleOp("bitsize", 1, arith.bitsize, _nat_bitsize),
    OracleOp("ilog2", 1, arith.ilog2, lambda a: a.bit_length() - 1, pre=lambda a: a > 0),
)}


@dataclass(frozen=True, order=True)
class Mismatch:
    op: str
    args: Tuple[int, ...]
    inputs: Tuple[str, ...] = field(compare=False)
    expected: str = field(compare=False)
    got: str = field(compare=False)


@dataclass
class DifferentialReport:
    seed: int
    bound: int
    random_trials: int
    ops: Tuple[str, ...]
    checked: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        lines = [
            f"differential suite seed={self.seed} bound={self.bound} "
            f"random_trials={self.random_trials} ops={','.join(self.ops)}",
            f"checked {self.checked} cases in {self.elapsed:.2f}s, {len(self.mismatches)} mismatches",
        ]
        for m in self.mismatches:
            lines.append(f"MISMATCH {m.op}({', '.join(m.inputs)}): expected {m.expected}, got {m.got}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["op", "input1", "input2", "expected", "got"])
        for m in self.mismatches:
            second = m.inputs[1] if len(m.inputs) > 1 else ""
            writer.writerow([m.op, m.inputs[0], second, m.expected, m.got])
        return buf.getvalue()


def _cases(op: OracleOp, bound: int, random_trials: int, rng: random.Random) -> Iterable[Tuple[int, ...]]:
    if op.arity == 1:
        for a in range(bound + 1):
            yield (a,)
    else:
        for a in range(bound + 1):
            for b in range(bound + 1):
                yield (a, b)
    for _ in range(random_trials):
        yield op.draw(rng, op.operand_bits)


def check_op(op: OracleOp, bound: int, random_trials: int, seed: int) -> Tuple[int, List[Mismatch]]:
    """Run one op over the exhaustive range and its random trials; returns (checked, mismatches)"""
    # one generator per op: results do not depend on worker scheduling
    rng = random.Random(f"{seed}:{op.name}")
    checked = 0
    mismatches: List[Mismatch] = []
    # the exhaustive range reuses each operand tree across all its pairs
    small = [from_natural(a) for a in range(bound + 1)]
    for args in _cases(op, bound, random_trials, rng):
        if not op.pre(*args):
            continue
        checked += 1
        trees = [small[a] if a <= bound else from_natural(a) for a in args]
        expected = str(op.nat_fn(*args))
        try:
            got = _project(op.tree_fn(*trees))
        except HBNError as e:
            got = f"raised {type(e).__name__}: {e}"
        if got != expected:
            mismatches.append(Mismatch(op.name, args, tuple(render_tree(t) for t in trees), expected, got))
    return checked, mismatches


def differential_suite(op_set: Optional[Sequence[str]] = None,
                       bound: int = DIFFERENTIAL_BOUND,
                       random_trials: int = DIFFERENTIAL_TRIALS,
                       seed: int = DIFFERENTIAL_SEED,
                       workers: int = DIFFERENTIAL_WORKERS) -> DifferentialReport:
    names = tuple(op_set) if op_set else tuple(OPS)
    unknown = [n for n in names if n not in OPS]
    if unknown:
        raise ValueError(f"unknown differential ops: {', '.join(unknown)}")

    report = DifferentialReport(seed=seed, bound=bound, random_trials=random_trials, ops=names)
    logger.info(f"[signal] Differential suite starting: ops={','.join(names)} bound={bound} "
                f"trials={random_trials} seed={seed}")
    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(check_op, OPS[n], bound, random_trials, seed) for n in names]
        for future in futures:
            checked, mismatches = future.result()
            report.checked += checked
            report.mismatches.extend(mismatches)
    report.mismatches.sort()
    report.elapsed = time.perf_counter() - start

    if report.ok:
        logger.info(f"[signal] Differential suite passed: {report.checked} cases")
    else:
        logger.warning(f"[boundary:error] Differential suite found {len(report.mismatches)} mismatches")
    return report
