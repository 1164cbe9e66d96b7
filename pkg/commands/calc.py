import argparse
import logging

from config.config import DECIMAL_BIT_BUDGET, DEFAULT_FORMAT, OUTPUT_FORMATS
from utils.expression_parser import ExpressionParser
from utils.helpers import truncate_text
from utils.result_formatter import ResultFormatter

logger = logging.getLogger('hbn.calc')


class Calculator:
    """`eval` command: evaluate one expression and print the result"""
    name = "eval"
    help = "evaluate an expression over hereditarily binary numbers"

    def __init__(self, app):
        self.app = app
        self._parser = ExpressionParser()
        logger.debug("[init] Calculator command")

    def configure(self, parser: argparse.ArgumentParser):
        parser.add_argument("expr", help='expression, e.g. "tsize(best(20) + best(30))"')
        parser.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT,
                            help="output format (default: %(default)s)")
        parser.add_argument("--decimal-bit-budget", type=int, default=DECIMAL_BIT_BUDGET,
                            help="largest bitsize printed in decimal (default: %(default)s)")

    def eval_command(self, expr: str, fmt: str = DEFAULT_FORMAT, decimal_bit_budget: int = DECIMAL_BIT_BUDGET) -> str:
        syntax_tree = self._parser.parse_expression(expr)
        value = self._parser.evaluate(syntax_tree)
        logger.debug(f"[signal] Evaluated {truncate_text(expr, 80)!r}")
        return ResultFormatter(decimal_bit_budget).format(value, fmt)

    def __call__(self, args: argparse.Namespace) -> int:
        print(self.eval_command(args.expr, args.format, args.decimal_bit_budget))
        return 0


def setup(app):
    app.add_command(Calculator(app))
