from typing import List, Optional, Union

from config.config import DECIMAL_BIT_BUDGET, OUTPUT_FORMATS, STATS_DECIMAL_BITS
from hbn import arith, complexity
from hbn.core import HBN, Leaf, VNode, blocks_of, describe, render_tree, succ, to_natural
from hbn.errors import ResourceError


class ResultFormatter:
    """Renders calculator results as decimal text, canonical tree syntax or structural stats"""

    def __init__(self, decimal_bit_budget: Optional[int] = None, stats_decimal_bits: int = STATS_DECIMAL_BITS):
        self.decimal_bit_budget = DECIMAL_BIT_BUDGET if decimal_bit_budget is None else decimal_bit_budget
        self.stats_decimal_bits = stats_decimal_bits

    def format(self, value: Union[HBN, arith.Ordering], fmt: str) -> str:
        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        # comparison atoms print the same in every format
        if isinstance(value, arith.Ordering):
            return value.value
        if fmt == "decimal":
            return self.format_decimal(value)
        if fmt == "tree":
            return render_tree(value)
        return self.format_stats(value)

    def format_decimal(self, x: HBN) -> str:
        try:
            return str(to_natural(x, bit_budget=self.decimal_bit_budget))
        except ResourceError as e:
            size = describe(arith.bitsize(x), self.stats_decimal_bits)
            raise ResourceError("decimal", f"result has bitsize {size}, too large to print in decimal",
                                self.decimal_bit_budget) from e

    def format_stats(self, x: HBN) -> str:
        lines: List[str] = [
            f"bitsize: {self._field(arith.bitsize(x))}",
            f"tsize: {self._field(complexity.tsize(x))}",
            f"parity: {self._parity(x)}",
            f"blocks: {self._field(arith.block_count(blocks_of(x)))}",
            f"leading block: {self._field(succ(x.counter)) if not isinstance(x, Leaf) else 0}",
        ]
        return "\n".join(lines)

    def _field(self, x: HBN) -> str:
        return describe(x, self.stats_decimal_bits)

    @staticmethod
    def _parity(x: HBN) -> str:
        if isinstance(x, Leaf):
            return "zero"
        return "odd" if isinstance(x, VNode) else "even"
