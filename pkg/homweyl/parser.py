"""
Text syntax for elements of A_n and A_n^k.

    expr    := term (('+' | '-') term)*
    term    := '-' term | product
    product := power (op? power)*      op is '*' or '·' (associative) or '⊛' / '@' (star)
    power   := atom ('^' integer)?
    atom    := rational | generator | '(' expr ')'

Juxtaposition is the associative product. Both product kinds associate to the
left, and one unparenthesized chain may use only one of them. '^' is always the
associative power. Rationals are integers or p/q; decimals are rejected.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Union

from .arith import WeylPoly, add, check_index, format_poly, mul_assoc, power, scale
from .errors import ExprSyntaxError, MixedProductError
from .homstar import star
from .twist import TwistVector

logger = logging.getLogger(__name__)

ASSOC = "assoc"
STAR = "star"

_TOKEN_PATTERNS = [
    ("decimal", r"\d+\.\d*|\.\d+|\d+[eE][-+]?\d+"),
    ("number", r"\d+(?:/\d+)?"),
    ("generator", r"[xy]\d*"),
    ("lpar", r"\("),
    ("rpar", r"\)"),
    ("plus", r"\+"),
    ("minus", r"-|−"),
    ("assoc", r"\*|·"),
    ("star", r"⊛|@"),
    ("pow", r"\^"),
    ("skip", r"\s+"),
    ("error", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_PATTERNS))


class Token(NamedTuple):
    type: str
    value: str
    where: int


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Generator:
    kind: str
    index: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


Expr = Union[Literal, Generator, Neg, BinOp, Power]


def tokenize(text: str) -> Iterator[Token]:
    for mo in _TOKEN_RE.finditer(text):
        kind = mo.lastgroup
        value = mo.group()
        if kind == "skip":
            continue
        if kind == "decimal":
            raise ExprSyntaxError(f"decimal literal {value!r} is not exact; write p/q", mo.start())
        if kind == "error":
            raise ExprSyntaxError(f"unexpected character {value!r}", mo.start())
        yield Token(kind, value, mo.start())


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens: List[Token] = list(tokenize(text))
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self, kind: Optional[str] = None) -> Token:
        token = self.peek()
        if token is None:
            raise ExprSyntaxError(f"expected {kind or 'an operand'} at end of input", len(self.text))
        if kind is not None and token.type != kind:
            raise ExprSyntaxError(f"expected {kind}, found {token.value!r}", token.where)
        self.pos += 1
        return token

    def parse(self) -> Expr:
        if not self.tokens:
            raise ExprSyntaxError("empty expression", 0)
        expr = self.expr()
        token = self.peek()
        if token is not None:
            raise ExprSyntaxError(f"unexpected {token.value!r}", token.where)
        return expr

    def expr(self) -> Expr:
        left = self.term()
        while (token := self.peek()) is not None and token.type in ("plus", "minus"):
            self.advance()
            left = BinOp("+" if token.type == "plus" else "-", left, self.term())
        return left

    def term(self) -> Expr:
        token = self.peek()
        if token is not None and token.type == "minus":
            self.advance()
            return Neg(self.term())
        return self.product()

    def product(self) -> Expr:
        left = self.power()
        kind: Optional[str] = None
        while (token := self.peek()) is not None:
            if token.type in (ASSOC, STAR):
                self.advance()
                op = token.type
            elif token.type in ("number", "generator", "lpar"):
                op = ASSOC
            else:
                break
            if kind is not None and op != kind:
                raise MixedProductError("associative and star products mixed without parentheses", token.where)
            kind = op
            left = BinOp(op, left, self.power())
        return left

    def power(self) -> Expr:
        base = self.atom()
        token = self.peek()
        if token is not None and token.type == "pow":
            self.advance()
            exponent = self.advance()
            if exponent.type != "number" or "/" in exponent.value:
                raise ExprSyntaxError("exponent must be a nonnegative integer", exponent.where)
            return Power(base, int(exponent.value))
        return base

    def atom(self) -> Expr:
        token = self.advance()
        if token.type == "number":
            num, _, den = token.value.partition("/")
            if den and int(den) == 0:
                raise ExprSyntaxError("zero denominator", token.where)
            return Literal(Fraction(int(num), int(den) if den else 1))
        if token.type == "generator":
            return self.generator(token)
        if token.type == "lpar":
            inner = self.expr()
            self.advance("rpar")
            return inner
        raise ExprSyntaxError(f"expected an operand, found {token.value!r}", token.where)

    def generator(self, token: Token) -> Generator:
        kind, digits = token.value[0], token.value[1:]
        if not digits:
            if self.n != 1:
                raise ExprSyntaxError(f"bare {kind!r} needs an index when n = {self.n}", token.where)
            return Generator(kind, 1)
        index = int(digits)
        check_index(index, self.n)
        return Generator(kind, index)


def parse(text: str, n: int) -> Expr:
    """
    Parse text into an expression tree over A_n.

    Args:
        text: Expression such as "x1*y1 - 1/2" or "x1 ⊛ y1"
        n: Dimension; generator indices must lie in 1..n

    Returns:
        Expr tree
    """
    return _Parser(text, n).parse()


def evaluate(expr: Expr, k: TwistVector) -> WeylPoly:
    """Evaluate an expression tree; the associative product is mul_assoc and '⊛' is star(k, ., .)."""
    n = k.n
    if isinstance(expr, Literal):
        return WeylPoly.constant(n, expr.value)
    if isinstance(expr, Generator):
        return WeylPoly.x(n, expr.index) if expr.kind == "x" else WeylPoly.y(n, expr.index)
    if isinstance(expr, Neg):
        return scale(-1, evaluate(expr.operand, k))
    if isinstance(expr, Power):
        return power(evaluate(expr.base, k), expr.exponent)
    left = evaluate(expr.left, k)
    right = evaluate(expr.right, k)
    if expr.op == "+":
        return add(left, right)
    if expr.op == "-":
        return add(left, scale(-1, right))
    if expr.op == ASSOC:
        return mul_assoc(left, right)
    return star(k, left, right)


def parse_poly(text: str, k: TwistVector) -> WeylPoly:
    return evaluate(parse(text, k.n), k)


def format(p: WeylPoly) -> str:
    """Canonical text; parse_poly(format(p), k) == p for every k."""
    return format_poly(p)
