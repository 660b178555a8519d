from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homweyl.arith import NormalMonomial, WeylPoly, mul_assoc
from homweyl.errors import ExprSyntaxError, IndexRangeError, MixedProductError
from homweyl.homstar import star
from homweyl.parser import ASSOC, STAR, BinOp, Generator, Literal, Neg, Power, format, parse, parse_poly, tokenize
from homweyl.twist import TwistVector


def polys(n, slot_max=2, max_terms=3):
    monomials = st.lists(st.integers(0, slot_max), min_size=2 * n, max_size=2 * n).map(
        lambda e: NormalMonomial(tuple(e[:n]), tuple(e[n:]))
    )
    coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(monomials, coefficients, max_size=max_terms).map(lambda d: WeylPoly(n, d))


k1 = TwistVector.of(1)
x = WeylPoly.x(1, 1)
y = WeylPoly.y(1, 1)


class TestTokenize:
    """Lexical layer"""

    def test_tokens(self):
        """Numbers, generators and operators with positions"""
        tokens = list(tokenize("3/2*x1 ⊛ y2"))
        assert [(t.type, t.value) for t in tokens] == [
            ("number", "3/2"),
            ("assoc", "*"),
            ("generator", "x1"),
            ("star", "⊛"),
            ("generator", "y2"),
        ]
        assert tokens[3].where == 7

    def test_decimal_rejected(self):
        """0.5 is not exact"""
        with pytest.raises(ExprSyntaxError) as exc:
            list(tokenize("x1 + 0.5"))
        assert exc.value.position == 5

    def test_unknown_character(self):
        """Letters other than x and y are errors"""
        with pytest.raises(ExprSyntaxError):
            list(tokenize("z1"))


class TestParse:
    """Expression trees"""

    def test_precedence(self):
        """'^' binds tighter than products, products tighter than '+'"""
        tree = parse("x1 + 2*y1^2", 1)
        assert tree == BinOp("+", Generator("x", 1), BinOp(ASSOC, Literal(Fraction(2)), Power(Generator("y", 1), 2)))

    def test_juxtaposition_is_associative(self):
        """'2x1y1' multiplies associatively"""
        assert parse("2x1y1", 1) == BinOp(ASSOC, BinOp(ASSOC, Literal(Fraction(2)), Generator("x", 1)), Generator("y", 1))

    def test_star_chains_left(self):
        """a ⊛ b ⊛ c = (a ⊛ b) ⊛ c"""
        assert parse("x1 @ y1 ⊛ x1", 1) == BinOp(STAR, BinOp(STAR, Generator("x", 1), Generator("y", 1)), Generator("x", 1))

    def test_unary_minus(self):
        """Leading minus negates the whole product"""
        assert parse("-x1*y1", 1) == Neg(BinOp(ASSOC, Generator("x", 1), Generator("y", 1)))

    def test_mixed_products_need_parentheses(self):
        """'x * y ⊛ x' is ambiguous"""
        with pytest.raises(MixedProductError):
            parse("x1*y1 ⊛ x1", 1)
        with pytest.raises(MixedProductError):
            parse("x1 y1 ⊛ x1", 1)
        assert parse("(x1*y1) ⊛ x1", 1) == BinOp(STAR, BinOp(ASSOC, Generator("x", 1), Generator("y", 1)), Generator("x", 1))

    def test_bare_generators_only_for_n1(self):
        """'x' means x1 in A_1 and is an error in A_2"""
        assert parse("x", 1) == Generator("x", 1)
        with pytest.raises(ExprSyntaxError):
            parse("x", 2)

    def test_index_range(self):
        """Indices live in 1..n"""
        with pytest.raises(IndexRangeError):
            parse("y3", 2)

    @pytest.mark.parametrize("text", ["", "x1 +", "(x1", "x1)", "x1^-1", "x1^1/2", "1/0", "*x1"])
    def test_malformed(self, text):
        """Malformed input raises ExprSyntaxError"""
        with pytest.raises(ExprSyntaxError):
            parse(text, 1)


class TestEvaluate:
    """Evaluation in A_n and A_n^k"""

    def test_associative_product(self):
        """x1*y1 = y1*x1 + 1"""
        assert format(parse_poly("x1*y1", k1)) == "y1*x1 + 1"

    def test_star_product(self):
        """x1 ⊛ y1 = y1*x1 + x1 + 1 for k = 1"""
        assert format(parse_poly("x1 ⊛ y1", k1)) == "y1*x1 + x1 + 1"
        assert parse_poly("x @ y", k1) == star(k1, x, y)

    def test_power_is_associative(self):
        """'^' never uses the star product"""
        assert parse_poly("y^2", TwistVector.of(5)) == mul_assoc(y, y)

    def test_fractions(self):
        """p/q coefficients and subtraction"""
        assert parse_poly("1/2 - 3/4*y1", k1) == Fraction(1, 2) - Fraction(3, 4) * y

    def test_several_variables(self):
        """Different indices commute"""
        k = TwistVector.of(1, 2)
        assert parse_poly("x2*y1 - y1*x2", k).is_zero()
        assert format(parse_poly("y2 ⊛ 1", k)) == "y2 + 2"

    @settings(max_examples=50, deadline=None)
    @given(polys(2))
    def test_format_parses_back(self, p):
        """parse_poly(format(p)) == p"""
        assert parse_poly(format(p), TwistVector.of(3, "-1/2")) == p
