"""
Tree type, successor/predecessor, single digit steps and conversions.

A positive number is a run-length encoded bijective base-2 expansion: a
VNode starts (least significant end) with counter+1 applications of
o(x)=2x+1, a WNode with counter+1 applications of i(x)=2x+2, and `rest`
holds the counters of the alternating blocks that follow toward the most
significant digit. Counters are themselves trees.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import groupby
from typing import TYPE_CHECKING, Iterable, Optional, Tuple, final

from config.config import DECIMAL_BIT_BUDGET, STATS_DECIMAL_BITS
from hbn.errors import DomainError, ParityError, ResourceError, UnderflowError

if TYPE_CHECKING:
    from hbn.complexity import OpStats

logger = logging.getLogger('hbn.core')


class HBN:
    """Base of the three tree shapes; values are immutable and may share subtrees"""
    __slots__ = ()

    def __repr__(self) -> str:
        return render_tree(self)

    __str__ = __repr__


@final
@dataclass(frozen=True, slots=True, repr=False)
class Leaf(HBN):
    pass


@final
@dataclass(frozen=True, slots=True, repr=False)
class VNode(HBN):
    counter: HBN
    rest: Tuple[HBN, ...] = ()


@final
@dataclass(frozen=True, slots=True, repr=False)
class WNode(HBN):
    counter: HBN
    rest: Tuple[HBN, ...] = ()


E = Leaf()
ONE = VNode(E)
TWO = WNode(E)


def v(counter: HBN, rest: Iterable[HBN] = ()) -> VNode:
    return VNode(counter, tuple(rest))


def w(counter: HBN, rest: Iterable[HBN] = ()) -> WNode:
    return WNode(counter, tuple(rest))


def zero() -> HBN:
    return E


def is_positive(x: HBN) -> bool:
    return not isinstance(x, Leaf)


def is_odd(x: HBN) -> bool:
    return isinstance(x, VNode)


def is_even_positive(x: HBN) -> bool:
    return isinstance(x, WNode)


def blocks_of(x: HBN) -> Tuple[HBN, ...]:
    """Block counters, least significant block first"""
    if isinstance(x, Leaf):
        return ()
    return (x.counter,) + x.rest


def succ(x: HBN, stats: Optional[OpStats] = None) -> HBN:
    if stats is not None:
        stats.record_succ()
    if isinstance(x, Leaf):
        return ONE
    c, rest = x.counter, x.rest
    if isinstance(x, VNode):
        if not isinstance(c, Leaf):
            # o^(c+1)(u) + 1 = i(o^c(u))
            return WNode(E, (pred(c, stats),) + rest)
        if not rest:
            return TWO
        return WNode(succ(rest[0], stats), rest[1:])
    if not rest:
        return VNode(succ(c, stats))
    head = rest[0]
    if not isinstance(head, Leaf):
        return VNode(c, (E, pred(head, stats)) + rest[1:])
    if len(rest) == 1:
        return VNode(c, rest)
    return VNode(c, (succ(rest[1], stats),) + rest[2:])


def pred(x: HBN, stats: Optional[OpStats] = None) -> HBN:
    if stats is not None:
        stats.record_pred()
    if isinstance(x, Leaf):
        raise UnderflowError("pred", "zero has no predecessor")
    c, rest = x.counter, x.rest
    if isinstance(x, WNode):
        if not isinstance(c, Leaf):
            return VNode(E, (pred(c, stats),) + rest)
        if not rest:
            return ONE
        return VNode(succ(rest[0], stats), rest[1:])
    if not rest:
        if isinstance(c, Leaf):
            return E
        return WNode(pred(c, stats))
    head = rest[0]
    if not isinstance(head, Leaf):
        return WNode(c, (E, pred(head, stats)) + rest[1:])
    if len(rest) == 1:
        return WNode(c, rest)
    return WNode(c, (succ(rest[1], stats),) + rest[2:])


def apply_o(x: HBN) -> VNode:
    if isinstance(x, Leaf):
        return ONE
    if isinstance(x, WNode):
        return VNode(E, (x.counter,) + x.rest)
    return VNode(succ(x.counter), x.rest)


def apply_i(x: HBN) -> WNode:
    if isinstance(x, Leaf):
        return TWO
    if isinstance(x, VNode):
        return WNode(E, (x.counter,) + x.rest)
    return WNode(succ(x.counter), x.rest)


def unapply_o(x: HBN) -> HBN:
    if not isinstance(x, VNode):
        raise ParityError("unapply_o", f"expected an odd number, got {describe(x)}")
    if not isinstance(x.counter, Leaf):
        return VNode(pred(x.counter), x.rest)
    if not x.rest:
        return E
    return WNode(x.rest[0], x.rest[1:])


def unapply_i(x: HBN) -> HBN:
    if not isinstance(x, WNode):
        raise ParityError("unapply_i", f"expected an even positive number, got {describe(x)}")
    if not isinstance(x.counter, Leaf):
        return WNode(pred(x.counter), x.rest)
    if not x.rest:
        return E
    return VNode(x.rest[0], x.rest[1:])


def _to_int(x: HBN, budget: int, op: str) -> int:
    """Materialize x, refusing once the block lengths add up past `budget` bits"""
    if isinstance(x, Leaf):
        return 0
    # a counter c contributes c+1 digits, so it never needs more than this many
    counter_budget = budget.bit_length()
    digit = "0" if isinstance(x, VNode) else "1"
    runs = []
    total = 0
    for counter in blocks_of(x):
        length = _to_int(counter, counter_budget, op) + 1
        total += length
        if total > budget:
            raise ResourceError(op, "bitsize exceeds the bit budget", budget)
        runs.append(digit * length)
        digit = "1" if digit == "0" else "0"
    # digits of k+1 after its leading 1: 0 for o, 1 for i, most significant first
    return int("1" + "".join(reversed(runs)), 2) - 1


def to_natural(x: HBN, bit_budget: Optional[int] = None) -> int:
    budget = DECIMAL_BIT_BUDGET if bit_budget is None else bit_budget
    try:
        return _to_int(x, budget, "to_natural")
    except ResourceError:
        logger.warning(f"[boundary:error] Refused to materialize a number past {budget} bits")
        raise


def from_natural(k: int) -> HBN:
    if k < 0:
        raise DomainError("from_natural", f"negative input {k}")
    if k == 0:
        return E
    digits = bin(k + 1)[3:][::-1]
    runs = [(bit, sum(1 for _ in group)) for bit, group in groupby(digits)]
    counters = tuple(from_natural(length - 1) for _, length in runs)
    kind = VNode if runs[0][0] == "0" else WNode
    return kind(counters[0], counters[1:])


def render_tree(x: HBN) -> str:
    if isinstance(x, Leaf):
        return "e"
    tag = "v" if isinstance(x, VNode) else "w"
    inner = ",".join(render_tree(c) for c in x.rest)
    return f"{tag}({render_tree(x.counter)},[{inner}])"


def describe(x: HBN, max_bits: int = STATS_DECIMAL_BITS) -> str:
    """Decimal text when x fits in max_bits digits, canonical tree syntax otherwise"""
    try:
        return str(_to_int(x, max_bits, "describe"))
    except ResourceError:
        return render_tree(x)
