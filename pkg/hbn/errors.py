"""
Exception hierarchy for hereditarily binary number operations
"""
from typing import Optional


class HBNError(Exception):
    """Base class for every error raised by the library"""


class ParseError(HBNError, ValueError):
    """Malformed input text, with the offending character position"""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class TreeSyntaxError(ParseError):
    pass


class ArithmeticOpError(HBNError, ArithmeticError):
    """Arithmetic failure tagged with the operation that raised it"""

    def __init__(self, op: str, detail: str):
        self.op = op
        self.detail = detail
        super().__init__(f"{op}: {detail}")


class UnderflowError(ArithmeticOpError):
    pass


class ParityError(ArithmeticOpError):
    pass


class KindError(ParityError):
    pass


class DomainError(ArithmeticOpError):
    pass


class ResourceError(HBNError):
    """A configured budget (bits to materialize, loop iterations) was exceeded"""

    def __init__(self, op: str, detail: str, budget: int):
        self.op = op
        self.budget = budget
        super().__init__(f"{op}: {detail} (budget {budget})")
