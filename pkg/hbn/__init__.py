"""
Hereditarily binary numbers: arithmetic on run-length encoded, recursively
compressed bijective base-2 trees.
"""
# arith must load before blocks: its dispatch tables read blocks' finish steps
# mul stays a submodule attribute: import the function from hbn.mul
from hbn.errors import (ArithmeticOpError, DomainError, HBNError, KindError, ParityError,
                        ParseError, ResourceError, TreeSyntaxError, UnderflowError)
from hbn.core import (E, HBN, ONE, TWO, Leaf, VNode, WNode, apply_i, apply_o, blocks_of,
                      describe, from_natural, is_even_positive, is_odd, is_positive, pred,
                      render_tree, succ, to_natural, unapply_i, unapply_o, v, w, zero)
from hbn.arith import (Ordering, add, bitsize, cmp, compare_big_first, double, exp2, half,
                       ilog2, left_shift, reversed_dual, sub, sub_ordered)
from hbn.blocks import (iminus, iominus, iplus, itimes, oiminus, oiplus, ominus, oplus,
                        otimes, split_i, split_o)
from hbn.complexity import OpStats, best_case, iterate, measure_succ_cost, tsize, worst_case
from hbn.tree_syntax import parse_tree

__version__ = "1.0.0"
