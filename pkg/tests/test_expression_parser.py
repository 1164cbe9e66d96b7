import pytest

from hbn.arith import Ordering
from hbn.core import from_natural, to_natural
from hbn.errors import DomainError, ParseError, TreeSyntaxError, UnderflowError
from utils.expression_parser import ExpressionParser


@pytest.fixture
def parser():
    return ExpressionParser()


def _eval(parser, text):
    return parser.evaluate(parser.parse_expression(text))


@pytest.mark.parametrize("text, expected", [
    ("2+3*4", 14),
    ("10-3-2", 5),
    ("(2+3)*4", 20),
    ("2*3*4 - 1", 23),
    ("e + 7", 7),
    ("w(v(e,[]),[e,e,e]) + 0", 42),
    ("w( v(e, []) , [e,e,e] )*2", 84),
    ("succ(41)", 42),
    ("pred(43)", 42),
    ("pow2(10)", 1024),
    ("shl(4, 3)", 48),
    ("double(21)", 42),
    ("half(42)", 21),
    ("bitsize(123456)", 16),
    ("tsize(123456)", 12),
    ("ilog2(1024)", 10),
    ("best(3)", 65534),
    ("worst(3)", 84),
    ("tsize(best(20) + best(30))", 314),
])
def test_evaluates(parser, text, expected):
    assert to_natural(_eval(parser, text)) == expected


def test_cmp_returns_ordering(parser):
    assert _eval(parser, "cmp(1, 2)") is Ordering.LT
    assert _eval(parser, "cmp(best(3), 65534)") is Ordering.EQ
    assert _eval(parser, "cmp(worst(3), 83)") is Ordering.GT


def test_cmp_result_is_not_a_number(parser):
    with pytest.raises(DomainError, match="comparison result"):
        _eval(parser, "cmp(1, 2) + 1")
    with pytest.raises(DomainError):
        _eval(parser, "succ(cmp(1, 2))")


def test_large_literal(parser):
    big = 3 ** 200
    assert _eval(parser, str(big)) == from_natural(big)


@pytest.mark.parametrize("text, position", [
    ("2 + * 3", 4),
    ("foo(1)", 0),
    ("succ(1, 2)", 0),
    ("2 $ 3", 2),
    ("(1+2", 4),
    ("1 2", 2),
    ("succ 1", 5),
    ("", 0),
    ("   ", 0),
    ("3 +", 3),
])
def test_parse_errors_report_position(parser, text, position):
    with pytest.raises(ParseError) as excinfo:
        parser.parse_expression(text)
    assert excinfo.value.position == position


def test_tree_literal_errors_use_expression_positions(parser):
    with pytest.raises(TreeSyntaxError) as excinfo:
        parser.parse_expression("1 + v(e,[)")
    assert excinfo.value.position == 9
    with pytest.raises(ParseError):
        parser.parse_expression("1 + v(e,[]")
    with pytest.raises(ParseError):
        parser.parse_expression("w + 1")


def test_subtraction_underflow(parser):
    with pytest.raises(UnderflowError):
        _eval(parser, "3 - 5")
