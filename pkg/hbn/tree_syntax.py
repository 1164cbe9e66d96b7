"""
Canonical text syntax for trees:  t := "e" | ("v"|"w") "(" t "," "[" (t ("," t)*)? "]" ")"
"""
from typing import List

from hbn.core import E, HBN, VNode, WNode, render_tree
from hbn.errors import TreeSyntaxError

__all__ = ["parse_tree", "render_tree", "TreeParser"]


class TreeParser:
    """Recursive descent over the tree grammar; whitespace is ignored everywhere"""

    def __init__(self, text: str, offset: int = 0):
        self._text = text
        self._pos = 0
        self._offset = offset  # reported positions are relative to an enclosing text

    def parse(self) -> HBN:
        tree = self._tree()
        self._skip_ws()
        if self._pos < len(self._text):
            self._fail(f"unexpected {self._text[self._pos]!r} after tree")
        return tree

    def _fail(self, message: str):
        raise TreeSyntaxError(message, self._pos + self._offset, self._text)

    def _skip_ws(self):
        while self._pos < len(self._text) and self._text[self._pos].isspace():
            self._pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self._text[self._pos] if self._pos < len(self._text) else ""

    def _expect(self, char: str):
        if self._peek() != char:
            found = repr(self._text[self._pos]) if self._pos < len(self._text) else "end of input"
            self._fail(f"expected {char!r}, found {found}")
        self._pos += 1

    def _tree(self) -> HBN:
        tag = self._peek()
        if tag == "e":
            self._pos += 1
            return E
        if tag not in ("v", "w"):
            self._fail(f"expected 'e', 'v' or 'w', found {tag!r}" if tag else "unexpected end of input")
        self._pos += 1
        self._expect("(")
        counter = self._tree()
        self._expect(",")
        self._expect("[")
        rest: List[HBN] = []
        if self._peek() != "]":
            rest.append(self._tree())
            while self._peek() == ",":
                self._pos += 1
                rest.append(self._tree())
        self._expect("]")
        self._expect(")")
        kind = VNode if tag == "v" else WNode
        return kind(counter, tuple(rest))


def parse_tree(text: str) -> HBN:
    return TreeParser(text).parse()
