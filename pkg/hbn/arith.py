"""
Public arithmetic: add, sub, cmp, bitsize, ilog2, double, half, exp2, left_shift.

add, sub, cmp, bitsize and blocks.otimes/itimes call each other. add and
sub walk the operands one leading block pair at a time; the outer step of
each fused identity is pushed on a stack and applied once the inner
sum/difference is known, so block count never turns into stack depth.
"""
import enum
from typing import Callable, List, Sequence, Tuple

from hbn import blocks
from hbn.core import (E, HBN, ONE, Leaf, VNode, WNode, apply_o, describe, is_odd,
                      pred, succ, unapply_o)
from hbn.errors import DomainError, ParityError, UnderflowError

Finish = Callable[[HBN, HBN], HBN]


class Ordering(str, enum.Enum):
    LT = "<"
    EQ = "="
    GT = ">"

    def flipped(self) -> "Ordering":
        if self is Ordering.LT:
            return Ordering.GT
        if self is Ordering.GT:
            return Ordering.LT
        return self


def _split(x: HBN) -> blocks.BlockView:
    return blocks.split_o(x) if isinstance(x, VNode) else blocks.split_i(x)


def _times(x: HBN) -> Callable[[HBN, HBN], HBN]:
    """otimes or itimes, matching the kind of x's leading block"""
    return blocks.otimes if isinstance(x, VNode) else blocks.itimes


_ADD_FINISH = {
    (True, True): blocks.finish_oplus,
    (True, False): blocks.finish_oiplus,
    (False, True): blocks.finish_oiplus,
    (False, False): blocks.finish_iplus,
}

_SUB_FINISH = {
    (True, True): blocks.finish_ominus,
    (True, False): blocks.finish_oiminus,
    (False, True): blocks.finish_iominus,
    (False, False): blocks.finish_iminus,
}


def _align(x: HBN, y: HBN) -> Tuple[HBN, HBN, HBN]:
    """Peel a common-length leading block off x and y: (k, x', y').

    The longer block keeps its excess on its own remainder, so x = f^k(x')
    and y = g^k(y') where f, g are the leading digit kinds of x and y.
    """
    a, xs = _split(x)
    b, ys = _split(y)
    order = cmp(a, b)
    if order is Ordering.EQ:
        return succ(a), xs, ys
    if order is Ordering.GT:
        return succ(b), _times(x)(sub_ordered(a, b), xs), ys
    return succ(a), xs, _times(y)(sub_ordered(b, a), ys)


def _unwind(pending: List[Tuple[Finish, HBN]], inner: HBN) -> HBN:
    for finish, k in reversed(pending):
        inner = finish(k, inner)
    return inner


def add(x: HBN, y: HBN) -> HBN:
    pending: List[Tuple[Finish, HBN]] = []
    while True:
        if isinstance(x, Leaf):
            return _unwind(pending, y)
        if isinstance(y, Leaf):
            return _unwind(pending, x)
        finish = _ADD_FINISH[isinstance(x, VNode), isinstance(y, VNode)]
        k, x, y = _align(x, y)
        pending.append((finish, k))


def sub(x: HBN, y: HBN) -> HBN:
    if cmp(x, y) is Ordering.LT:
        raise UnderflowError("sub", f"{describe(x)} < {describe(y)} "
                                    f"(bitsizes {describe(bitsize(x))} and {describe(bitsize(y))})")
    return sub_ordered(x, y)


def sub_ordered(x: HBN, y: HBN) -> HBN:
    """x - y for x >= y, without the comparison sub runs first.

    Each aligned step keeps the remainders ordered the same way.
    """
    pending: List[Tuple[Finish, HBN]] = []
    while not isinstance(y, Leaf):
        finish = _SUB_FINISH[isinstance(x, VNode), isinstance(y, VNode)]
        k, x, y = _align(x, y)
        pending.append((finish, k))
        if x == y:
            return _unwind(pending, E)
    return _unwind(pending, x)


def cmp(x: HBN, y: HBN) -> Ordering:
    while True:
        if isinstance(x, Leaf):
            return Ordering.EQ if isinstance(y, Leaf) else Ordering.LT
        if isinstance(y, Leaf):
            return Ordering.GT
        if x == y:
            return Ordering.EQ
        bx, by = bitsize(x), bitsize(y)
        # canonical trees: equal bitsizes are structurally equal
        if bx == by:
            return compare_big_first(reversed_dual(x), reversed_dual(y))
        # fewer digits means smaller, so compare the bitsizes instead
        x, y = bx, by


def compare_big_first(x: HBN, y: HBN) -> Ordering:
    """Compare reversed duals of two numbers of equal bitsize, biggest digit first"""
    while True:
        if isinstance(x, Leaf):
            return Ordering.EQ if isinstance(y, Leaf) else Ordering.LT
        if isinstance(y, Leaf):
            return Ordering.GT
        if isinstance(x, VNode) and isinstance(y, VNode):
            a, x = blocks.split_o(x)
            b, y = blocks.split_o(y)
            order = cmp(a, b)
            if order is not Ordering.EQ:
                # a longer run of the smaller digit o makes the number smaller
                return order.flipped()
        elif isinstance(x, WNode) and isinstance(y, WNode):
            a, x = blocks.split_i(x)
            b, y = blocks.split_i(y)
            order = cmp(a, b)
            if order is not Ordering.EQ:
                return order
        else:
            return Ordering.LT if isinstance(x, VNode) else Ordering.GT


def block_count(xs: Sequence[HBN]) -> HBN:
    n = E
    for _ in xs:
        n = succ(n)
    return n


def reversed_dual(x: HBN) -> HBN:
    if isinstance(x, Leaf):
        return E
    counters = (x.counter,) + x.rest
    head, *tail = reversed(counters)
    # an odd number of alternating blocks ends with the kind it starts with
    same_kind = is_odd(block_count(counters))
    if isinstance(x, VNode) == same_kind:
        return VNode(head, tuple(tail))
    return WNode(head, tuple(tail))


def bitsize(x: HBN) -> HBN:
    total = E
    if isinstance(x, Leaf):
        return total
    for counter in (x.counter,) + x.rest:
        total = succ(add(total, counter))
    return total


def ilog2(x: HBN) -> HBN:
    if isinstance(x, Leaf):
        raise DomainError("ilog2", "logarithm of zero")
    return bitsize(pred(x))


def double(x: HBN) -> HBN:
    return pred(apply_o(x))


def half(x: HBN) -> HBN:
    if isinstance(x, VNode):
        raise ParityError("half", f"{describe(x)} is odd")
    if isinstance(x, Leaf):
        return E
    return unapply_o(succ(x))


def exp2(x: HBN) -> HBN:
    if isinstance(x, Leaf):
        return ONE
    return succ(VNode(pred(x)))


def left_shift(n: HBN, k: HBN) -> HBN:
    """k * 2^n"""
    if isinstance(k, Leaf):
        return E
    return succ(blocks.otimes(n, pred(k)))
