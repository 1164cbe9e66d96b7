import pytest

from hbn.core import E, from_natural
from hbn.errors import ParseError, TreeSyntaxError
from hbn.tree_syntax import parse_tree, render_tree


def test_parse_known_values():
    assert parse_tree("e") == E
    assert parse_tree("w(v(e,[]),[e,e,e])") == from_natural(42)
    assert parse_tree("w(w(w(e,[]),[]),[])") == from_natural(65534)


def test_whitespace_is_ignored():
    assert parse_tree("  w( v(e, [ ]) , [e, e,e] ) ") == from_natural(42)


def test_render_parse_round_trip():
    for k in range(500):
        x = from_natural(k)
        assert parse_tree(render_tree(x)) == x


@pytest.mark.parametrize("text, position", [
    ("x", 0),
    ("v(e,[]", 6),
    ("v(e [])", 4),
    ("e e", 2),
    ("w(e,[e,])", 7),
    ("", 0),
])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(TreeSyntaxError) as excinfo:
        parse_tree(text)
    assert excinfo.value.position == position
    assert f"at position {position}" in str(excinfo.value)


def test_tree_syntax_error_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_tree("v(")
    with pytest.raises(ValueError):
        parse_tree("q")
