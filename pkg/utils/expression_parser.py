import logging
from typing import Callable, Dict, List, Union

from hbn import arith, complexity, mul
from hbn.core import E, HBN, from_natural, pred, succ
from hbn.errors import DomainError, ParseError
from hbn.tree_syntax import TreeParser

Value = Union[HBN, arith.Ordering]

# name -> (arity, implementation)
FUNCTIONS: Dict[str, tuple] = {
    "succ": (1, succ),
    "pred": (1, pred),
    "pow2": (1, arith.exp2),
    "shl": (2, arith.left_shift),
    "double": (1, arith.double),
    "half": (1, arith.half),
    "bitsize": (1, arith.bitsize),
    "tsize": (1, complexity.tsize),
    "ilog2": (1, arith.ilog2),
    "best": (1, complexity.best_case),
    "worst": (1, complexity.worst_case),
    "cmp": (2, arith.cmp),
}

OPERATORS: Dict[str, Callable[[HBN, HBN], HBN]] = {
    "+": arith.add,
    "-": arith.sub,
    "*": mul.mul,
}


class ExpressionParser:
    """Parses calculator expressions over hereditarily binary numbers.

    expr := term (("+"|"-") term)*
    term := atom ("*" atom)*
    atom := NAT | "e" | tree-literal | fn "(" expr ("," expr)* ")" | "(" expr ")"
    """

    def __init__(self):
        self._logger = logging.getLogger('hbn.expression')
        self._tokens: List[Dict] = []
        self._index = 0
        self._text = ""

    def parse_expression(self, text: str) -> Dict:
        """Parse expression text into a syntax tree of dict nodes"""
        if not text or not text.strip():
            raise ParseError("empty expression", 0, text)

        self._text = text
        self._tokens = self._tokenize(text)
        self._index = 0
        tree = self._expr()
        token = self._peek()
        if token["type"] != "end":
            self._fail(f"unexpected {token['value']!r}", token)
        return tree

    def _fail(self, message: str, token: Dict):
        self._logger.debug(f"[boundary:error] Parse failed: {message} at {token['pos']}")
        raise ParseError(message, token["pos"], self._text)

    def _tokenize(self, text: str) -> List[Dict]:
        """Convert expression text into a token list; every token carries its start position"""
        tokens = []
        i = 0
        text_len = len(text)

        while i < text_len:
            char = text[i]

            if char.isspace():
                i += 1
                continue

            if char.isdigit():
                start = i
                while i < text_len and text[i].isdigit():
                    i += 1
                tokens.append({"type": "nat", "value": text[start:i], "pos": start})
                continue

            if char in "+-*":
                tokens.append({"type": "operator", "value": char, "pos": i})
                i += 1
                continue

            if char in "(),":
                kind = {"(": "open_paren", ")": "close_paren", ",": "comma"}[char]
                tokens.append({"type": kind, "value": char, "pos": i})
                i += 1
                continue

            if char.isalpha():
                start = i
                while i < text_len and (text[i].isalnum() or text[i] == "_"):
                    i += 1
                word = text[start:i]

                # v(...) / w(...) are tree literals, handed whole to the tree parser
                if word in ("v", "w"):
                    end = self._literal_end(text, i, start)
                    tree = TreeParser(text[start:end], offset=start).parse()
                    tokens.append({"type": "tree", "value": text[start:end], "tree": tree, "pos": start})
                    i = end
                    continue

                tokens.append({"type": "name", "value": word, "pos": start})
                continue

            raise ParseError(f"unexpected character {char!r}", i, text)

        tokens.append({"type": "end", "value": "end of input", "pos": text_len})
        return tokens

    @staticmethod
    def _literal_end(text: str, i: int, start: int) -> int:
        """Index just past the parenthesis closing the literal that starts at `start`"""
        while i < len(text) and text[i].isspace():
            i += 1
        if i >= len(text) or text[i] != "(":
            raise ParseError(f"expected '(' after {text[start]!r}", i, text)
        depth = 0
        while i < len(text):
            if text[i] == "(":
                depth += 1
            elif text[i] == ")":
                depth -= 1
                if depth == 0:
                    return i + 1
            i += 1
        raise ParseError("unterminated tree literal", start, text)

    def _peek(self) -> Dict:
        return self._tokens[self._index]

    def _advance(self) -> Dict:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, kind: str, what: str) -> Dict:
        token = self._peek()
        if token["type"] != kind:
            self._fail(f"expected {what}, found {token['value']!r}", token)
        return self._advance()

    def _expr(self) -> Dict:
        node = self._term()
        while self._peek()["type"] == "operator" and self._peek()["value"] in "+-":
            token = self._advance()
            node = {"type": "binop", "op": token["value"], "left": node, "right": self._term(),
                    "pos": token["pos"]}
        return node

    def _term(self) -> Dict:
        node = self._atom()
        while self._peek()["type"] == "operator" and self._peek()["value"] == "*":
            token = self._advance()
            node = {"type": "binop", "op": "*", "left": node, "right": self._atom(), "pos": token["pos"]}
        return node

    def _atom(self) -> Dict:
        token = self._advance()

        if token["type"] == "nat":
            return {"type": "literal", "value": from_natural(int(token["value"])), "pos": token["pos"]}

        if token["type"] == "tree":
            return {"type": "literal", "value": token["tree"], "pos": token["pos"]}

        if token["type"] == "open_paren":
            node = self._expr()
            self._expect("close_paren", "')'")
            return node

        if token["type"] == "name":
            name = token["value"]
            if name == "e":
                return {"type": "literal", "value": E, "pos": token["pos"]}
            if name not in FUNCTIONS:
                self._fail(f"unknown function {name!r}", token)
            self._expect("open_paren", f"'(' after {name}")
            args = [self._expr()]
            while self._peek()["type"] == "comma":
                self._advance()
                args.append(self._expr())
            self._expect("close_paren", "')'")
            arity = FUNCTIONS[name][0]
            if len(args) != arity:
                self._fail(f"{name} takes {arity} argument{'s' if arity > 1 else ''}, got {len(args)}", token)
            return {"type": "call", "name": name, "args": args, "pos": token["pos"]}

        self._fail(f"unexpected {token['value']!r}", token)

    def evaluate(self, syntax_tree: Dict) -> Value:
        """Evaluate a parsed expression with library semantics"""
        tree_type = syntax_tree["type"]

        if tree_type == "literal":
            return syntax_tree["value"]

        if tree_type == "binop":
            op = syntax_tree["op"]
            left = self._numeric(self.evaluate(syntax_tree["left"]), op)
            right = self._numeric(self.evaluate(syntax_tree["right"]), op)
            return OPERATORS[op](left, right)

        if tree_type == "call":
            name = syntax_tree["name"]
            args = [self._numeric(self.evaluate(arg), name) for arg in syntax_tree["args"]]
            return FUNCTIONS[name][1](*args)

        raise ValueError(f"unknown syntax node type: {tree_type}")

    @staticmethod
    def _numeric(value: Value, op: str) -> HBN:
        if isinstance(value, arith.Ordering):
            raise DomainError(op, f"comparison result {value.value!r} is not a number")
        return value
