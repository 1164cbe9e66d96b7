"""
General multiplication.

Two odd operands go through o^n(a) * o^m(b) = o^(n+m)(ab+a+b) - o^n(a) - o^m(b),
one leading block pair at a time. Other parities reduce to it with i = succ . o:
an even factor y is handled as y-1 plus a correction. Each reduction leaves a
finish step on a stack, applied to the product of the reduced operands.
"""
from functools import partial
from typing import Callable, List

from hbn import arith, blocks
from hbn.core import E, HBN, Leaf, VNode, pred, succ


def _odd_odd_finish(x: HBN, y: HBN, n: HBN, m: HBN, a: HBN, b: HBN, ab: HBN) -> HBN:
    p1 = arith.add(arith.add(a, b), ab)
    k = arith.add(succ(n), succ(m))
    # o^k(p1) = xy + x + y, so neither subtraction goes below zero
    return arith.sub_ordered(arith.sub_ordered(blocks.otimes(k, p1), x), y)


def _add_factor(x: HBN, z: HBN) -> HBN:
    return arith.add(x, z)


def _even_even_finish(px: HBN, py: HBN, z: HBN) -> HBN:
    # (px+1)(py+1) = px*py + px + py + 1
    return succ(arith.add(arith.add(px, py), z))


def mul(x: HBN, y: HBN) -> HBN:
    pending: List[Callable[[HBN], HBN]] = []
    while not isinstance(x, Leaf) and not isinstance(y, Leaf):
        x_odd, y_odd = isinstance(x, VNode), isinstance(y, VNode)
        if x_odd and y_odd:
            n, a = blocks.split_o(x)
            m, b = blocks.split_o(y)
            pending.append(partial(_odd_odd_finish, x, y, n, m, a, b))
            x, y = a, b
        elif x_odd:
            pending.append(partial(_add_factor, x))
            y = pred(y)
        elif y_odd:
            pending.append(partial(_add_factor, y))
            x = pred(x)
        else:
            px, py = pred(x), pred(y)
            pending.append(partial(_even_even_finish, px, py))
            x, y = px, py
    product = E
    for finish in reversed(pending):
        product = finish(product)
    return product
