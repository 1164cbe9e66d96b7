"""
Block-level primitives: iterated o/i by a tree-valued count, leading block
extraction, and the fused block identities behind add and sub.

With o^k(x) = 2^k(x+1)-1 and i^k(x) = 2^k(x+2)-2:

    o^k(x) + o^k(y) = i^k(x+y)
    o^k(x) + i^k(y) = i^k(x+y+1) - 1
    i^k(x) + i^k(y) = i^k(x+y+2) - 2
    o^k(x) - o^k(y) = o^k(x-y-1) + 1      x > y
    o^k(x) - i^k(y) = o^k(x-y-2) + 2      x > y+1
    i^k(x) - o^k(y) = o^k(x-y)            x >= y
    i^k(x) - i^k(y) = o^k(x-y-1) + 1      x > y

Each fused op is split into its inner add/sub and a `finish_*` step taking
the inner result, so arith can run the block loop without recursion.
"""
from typing import NamedTuple

from hbn import arith
from hbn.core import E, HBN, ONE, TWO, Leaf, VNode, WNode, describe, pred, succ
from hbn.errors import DomainError, KindError, UnderflowError


class BlockView(NamedTuple):
    count: HBN  # block length is count+1
    rest: HBN   # never of the block's own kind


def otimes(n: HBN, y: HBN) -> HBN:
    """o applied n times to y, one block at a time"""
    if isinstance(n, Leaf):
        return y
    if isinstance(y, Leaf):
        return VNode(pred(n))
    if isinstance(y, VNode):
        return VNode(arith.add(n, y.counter), y.rest)
    return VNode(pred(n), (y.counter,) + y.rest)


def itimes(n: HBN, y: HBN) -> HBN:
    """i applied n times to y, one block at a time"""
    if isinstance(n, Leaf):
        return y
    if isinstance(y, Leaf):
        return WNode(pred(n))
    if isinstance(y, WNode):
        return WNode(arith.add(n, y.counter), y.rest)
    return WNode(pred(n), (y.counter,) + y.rest)


def split_o(x: HBN) -> BlockView:
    if not isinstance(x, VNode):
        raise KindError("split_o", f"expected a v-node, got {describe(x)}")
    if not x.rest:
        return BlockView(x.counter, E)
    return BlockView(x.counter, WNode(x.rest[0], x.rest[1:]))


def split_i(x: HBN) -> BlockView:
    if not isinstance(x, WNode):
        raise KindError("split_i", f"expected a w-node, got {describe(x)}")
    if not x.rest:
        return BlockView(x.counter, E)
    return BlockView(x.counter, VNode(x.rest[0], x.rest[1:]))


# finish steps: s is the inner sum x+y, d the inner difference x-y

def finish_oplus(k: HBN, s: HBN) -> HBN:
    return itimes(k, s)


def finish_oiplus(k: HBN, s: HBN) -> HBN:
    return pred(itimes(k, succ(s)))


def finish_iplus(k: HBN, s: HBN) -> HBN:
    return pred(pred(itimes(k, succ(succ(s)))))


def finish_ominus(k: HBN, d: HBN) -> HBN:
    if isinstance(d, Leaf):
        return E
    return succ(otimes(k, pred(d)))


def finish_iminus(k: HBN, d: HBN) -> HBN:
    # same closed form as ominus: both sides differ by 2^k(x-y)
    return finish_ominus(k, d)


def finish_oiminus(k: HBN, d: HBN) -> HBN:
    if isinstance(d, Leaf) or d == ONE:
        return ONE
    if d == TWO:
        return succ(arith.exp2(k))
    return succ(succ(otimes(k, pred(pred(d)))))


def finish_iominus(k: HBN, d: HBN) -> HBN:
    return otimes(k, d)


def _require_block(op: str, k: HBN):
    if isinstance(k, Leaf):
        raise DomainError(op, "block length must be at least 1")


def _require_at_least(op: str, x: HBN, y: HBN):
    if arith.cmp(x, y) is arith.Ordering.LT:
        raise UnderflowError(op, f"{describe(x)} < {describe(y)} "
                                 f"(bitsizes {describe(arith.bitsize(x))} and {describe(arith.bitsize(y))})")


def oplus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("oplus", k)
    return finish_oplus(k, arith.add(x, y))


def oiplus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("oiplus", k)
    return finish_oiplus(k, arith.add(x, y))


def iplus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("iplus", k)
    return finish_iplus(k, arith.add(x, y))


def ominus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("ominus", k)
    _require_at_least("ominus", x, y)
    if x == y:
        return E
    return finish_ominus(k, arith.sub_ordered(x, y))


def iminus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("iminus", k)
    _require_at_least("iminus", x, y)
    if x == y:
        return E
    return finish_iminus(k, arith.sub_ordered(x, y))


def oiminus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("oiminus", k)
    _require_at_least("oiminus", x, succ(y))
    return finish_oiminus(k, arith.sub_ordered(x, y))


def iominus(k: HBN, x: HBN, y: HBN) -> HBN:
    _require_block("iominus", k)
    _require_at_least("iominus", x, y)
    return finish_iominus(k, arith.sub_ordered(x, y))
