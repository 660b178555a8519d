from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homweyl.arith import (
    MINUS_INFINITY,
    X,
    Y,
    SCALAR,
    NormalMonomial,
    WeylPoly,
    as_coefficient,
    commutator,
    deg_x,
    deg_y,
    format_poly,
    lowest_degree_part,
    mul_assoc,
    oracle_mul,
    oracle_normal_form,
    partial_x,
    partial_y,
    power,
    total_degree,
    word_of,
)
from homweyl.errors import DimensionError, IndexRangeError


def polys(n, slot_max=2, max_terms=3):
    monomials = st.lists(st.integers(0, slot_max), min_size=2 * n, max_size=2 * n).map(
        lambda e: NormalMonomial(tuple(e[:n]), tuple(e[n:]))
    )
    coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(monomials, coefficients, max_size=max_terms).map(lambda d: WeylPoly(n, d))


x = WeylPoly.x(1, 1)
y = WeylPoly.y(1, 1)
one = WeylPoly.one(1)


def mono1(i, j, c=1):
    return WeylPoly.monomial(1, (i,), (j,), c)


class TestWeylPoly:
    """Construction, equality and accessors"""

    def test_zero_coefficients_are_dropped(self):
        """Terms that cancel are not stored"""
        p = WeylPoly(1, {NormalMonomial((1,), (0,)): 0, NormalMonomial((0,), (1,)): 2})
        assert len(p) == 1
        assert p.coefficient(NormalMonomial((0,), (1,))) == 2

    def test_equality_with_scalars(self):
        """Integers compare as constants"""
        assert WeylPoly.constant(2, 3) == 3
        assert WeylPoly.zero(2) == 0
        assert WeylPoly.zero(2).is_zero()

    def test_dimension_is_checked(self):
        """Monomials must have exponent vectors of length n"""
        with pytest.raises(DimensionError):
            WeylPoly(2, {NormalMonomial((1,), (0,)): 1})
        with pytest.raises(DimensionError):
            WeylPoly(0)

    def test_generator_index_range(self):
        """Generator indices live in 1..n"""
        with pytest.raises(IndexRangeError):
            WeylPoly.x(2, 3)
        with pytest.raises(IndexRangeError):
            WeylPoly.y(2, 0)

    def test_generators_order(self):
        """x_1..x_n come before y_1..y_n"""
        gens = WeylPoly.generators(2)
        assert [str(g) for g in gens] == ["x1", "x2", "y1", "y2"]

    def test_scalar_value(self):
        """The coefficient of 1 is the scalar part"""
        p = mono1(1, 1) + 5
        assert p.scalar_value() == 5
        assert not p.is_scalar()
        assert WeylPoly.constant(1, Fraction(2, 3)).is_scalar()

    def test_mixed_dimensions_raise(self):
        """Adding elements of A_1 and A_2 is an error"""
        with pytest.raises(DimensionError):
            WeylPoly.x(1, 1) + WeylPoly.x(2, 1)


class TestCoefficients:
    """Exact coefficient parsing"""

    def test_fraction_strings(self):
        """p/q text becomes a reduced Fraction"""
        assert as_coefficient("6/4") == Fraction(3, 2)
        assert as_coefficient("-2") == -2

    def test_decimals_rejected(self):
        """No decimal input"""
        with pytest.raises(ValueError):
            as_coefficient("1.5")
        with pytest.raises(ValueError):
            as_coefficient("1e3")

    def test_zero_denominator_rejected(self):
        """p/0 is a ValueError, not a ZeroDivisionError"""
        with pytest.raises(ValueError, match="zero denominator"):
            as_coefficient("1/0")

    def test_booleans_rejected(self):
        """bool is not a coefficient"""
        with pytest.raises(TypeError):
            as_coefficient(True)


class TestMulAssoc:
    """Normal-ordered products"""

    def test_x_times_y(self):
        """x y = y x + 1"""
        assert mul_assoc(x, y) == mono1(1, 1) + 1

    def test_y_times_x_is_normal(self):
        """y x is already a basis monomial"""
        assert mul_assoc(y, x) == mono1(1, 1)

    def test_x_squared_y_squared(self):
        """x^2 y^2 = y^2 x^2 + 4 y x + 2"""
        assert mul_assoc(power(x, 2), power(y, 2)) == mono1(2, 2) + mono1(1, 1, 4) + 2

    def test_x_squared_y(self):
        """x^2 y = y x^2 + 2 x"""
        assert mul_assoc(power(x, 2), y) == mono1(1, 2) + mono1(0, 1, 2)

    def test_different_indices_commute(self):
        """[x_1, y_2] = 0 and [x_1, y_1] = 1 in A_2"""
        x1, y1, y2 = WeylPoly.x(2, 1), WeylPoly.y(2, 1), WeylPoly.y(2, 2)
        assert commutator(x1, y2).is_zero()
        assert commutator(x1, y1) == 1
        assert commutator(y1, x1) == -1

    def test_operator_sugar(self):
        """* and ** on WeylPoly are the associative product and power"""
        assert x * y == mul_assoc(x, y)
        assert x ** 3 == mul_assoc(x, mul_assoc(x, x))
        assert 2 * x == x + x

    def test_power_zero_is_one(self):
        """p^0 = 1"""
        assert power(mono1(2, 1), 0) == one

    def test_negative_power_rejected(self):
        """Only nonnegative exponents"""
        with pytest.raises(ValueError):
            power(x, -1)

    @settings(max_examples=40, deadline=None)
    @given(polys(1, 3), polys(1, 3), polys(1, 3))
    def test_associative_n1(self, a, b, c):
        """(ab)c = a(bc) in A_1"""
        assert mul_assoc(mul_assoc(a, b), c) == mul_assoc(a, mul_assoc(b, c))

    @settings(max_examples=30, deadline=None)
    @given(polys(2), polys(2), polys(2))
    def test_associative_and_distributive_n2(self, a, b, c):
        """Associativity and both distributive laws in A_2"""
        assert mul_assoc(mul_assoc(a, b), c) == mul_assoc(a, mul_assoc(b, c))
        assert mul_assoc(a, b + c) == mul_assoc(a, b) + mul_assoc(a, c)
        assert mul_assoc(a + b, c) == mul_assoc(a, c) + mul_assoc(b, c)

    @settings(max_examples=40, deadline=None)
    @given(polys(2).filter(lambda p: not p.is_zero()), polys(2).filter(lambda p: not p.is_zero()))
    def test_no_zero_divisors(self, p, q):
        """The product of nonzero elements is nonzero"""
        assert not mul_assoc(p, q).is_zero()

    @settings(max_examples=30, deadline=None)
    @given(polys(2))
    def test_ad_x_is_partial_y(self, p):
        """[x_l, p] = d p / d y_l and [p, y_l] = d p / d x_l"""
        for ell in (1, 2):
            assert commutator(WeylPoly.x(2, ell), p) == partial_y(p, ell)
            assert commutator(p, WeylPoly.y(2, ell)) == partial_x(p, ell)


class TestOracle:
    """Free-word rewriting agrees with the closed-form product"""

    def test_normal_form_of_xy(self):
        """The word x y rewrites to y x + 1"""
        assert oracle_normal_form([X(1), Y(1)], 1) == mono1(1, 1) + 1

    def test_scalars_are_pulled_out(self):
        """Scalar letters multiply the coefficient"""
        assert oracle_normal_form([SCALAR(3), X(1), SCALAR(Fraction(1, 2)), Y(1)], 1) == mono1(1, 1, Fraction(3, 2)) + Fraction(3, 2)

    def test_word_of_round_trip(self):
        """word_of lists the y-block before the x-block"""
        mono = NormalMonomial((2, 0), (0, 1))
        assert word_of(mono) == (Y(1), Y(1), X(2))
        assert oracle_normal_form(word_of(mono), 2) == WeylPoly(2, {mono: 1})

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.integers(0, 2), min_size=4, max_size=4),
        st.lists(st.integers(0, 2), min_size=4, max_size=4),
    )
    def test_monomial_products_n2(self, a, b):
        """mul_assoc = oracle on monomials of A_2"""
        ma = NormalMonomial(tuple(a[:2]), tuple(a[2:]))
        mb = NormalMonomial(tuple(b[:2]), tuple(b[2:]))
        expected = oracle_mul(word_of(ma), word_of(mb), 2)
        assert mul_assoc(WeylPoly(2, {ma: 1}), WeylPoly(2, {mb: 1})) == expected


class TestDegrees:
    """Degree functions and the lowest-degree part"""

    def test_degrees_of_zero(self):
        """deg(0) is below every integer"""
        zero = WeylPoly.zero(1)
        assert deg_y(zero, 1) is MINUS_INFINITY
        assert total_degree(zero) < 0
        assert deg_x(zero, 1) < -1000

    def test_partial_degrees(self):
        """deg_y and deg_x read the largest exponent"""
        p = mono1(3, 1) + mono1(0, 4)
        assert deg_y(p, 1) == 3
        assert deg_x(p, 1) == 4
        assert total_degree(p) == 4

    def test_lowest_degree_part(self):
        """Only the terms of minimal total degree survive"""
        p = mono1(2, 1) + mono1(0, 1, 3) + mono1(1, 0, -1)
        assert lowest_degree_part(p) == mono1(0, 1, 3) + mono1(1, 0, -1)


class TestFormatting:
    """Canonical printing"""

    def test_descending_grlex(self):
        """Higher degree first, y before x at equal degree"""
        assert format_poly(mono1(1, 1) + x + 1) == "y1*x1 + x1 + 1"
        assert format_poly(y - x) == "y1 - x1"

    def test_fractions_and_signs(self):
        """Coefficients print as reduced fractions"""
        p = mono1(2, 0, Fraction(-3, 2)) + Fraction(1, 2)
        assert format_poly(p) == "-3/2*y1^2 + 1/2"

    def test_zero(self):
        """The zero element prints as 0"""
        assert format_poly(WeylPoly.zero(3)) == "0"

    def test_several_indices(self):
        """Factors are joined with '*'"""
        p = WeylPoly.monomial(2, (1, 2), (0, 1))
        assert str(p) == "y1*y2^2*x2"
