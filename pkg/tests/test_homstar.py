import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homweyl.arith import NormalMonomial, WeylPoly, lowest_degree_part, mul_assoc
from homweyl.errors import DimensionError
from homweyl.homstar import (
    alternativity_defects,
    associator_star,
    commutator_identity_defect,
    commutator_star,
    hom_assoc_defect,
    hom_lie_defects,
    is_weak_identity,
    ore_star,
    star,
    untwisted_product,
    weak_unit_defect,
)
from homweyl.twist import TwistVector, apply_twist


def polys(n, slot_max=2, max_terms=2):
    monomials = st.lists(st.integers(0, slot_max), min_size=2 * n, max_size=2 * n).map(
        lambda e: NormalMonomial(tuple(e[:n]), tuple(e[n:]))
    )
    coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(monomials, coefficients, max_size=max_terms).map(lambda d: WeylPoly(n, d))


def twists(n):
    return st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=n, max_size=n).map(
        lambda values: TwistVector(tuple(values))
    )


x = WeylPoly.x(1, 1)
y = WeylPoly.y(1, 1)
yx = mul_assoc(y, x)


class TestStar:
    """The twisted product p * q = alpha_k(pq)"""

    def test_x_star_y(self):
        """x * y = y x + x + 1 for k = 1"""
        assert star(TwistVector.of(1), x, y) == yx + x + 1

    def test_zero_twist_is_associative_product(self):
        """k = 0 gives back A_n"""
        p, q = y ** 2, x ** 3
        assert star(TwistVector.zeros(1), p, q) == mul_assoc(p, q)

    def test_dimension_mismatch(self):
        """k and the operands must share n"""
        with pytest.raises(DimensionError):
            star(TwistVector.of(1, 1), x, y)

    def test_untwisted_product(self):
        """pq = alpha_{-k}(p * q)"""
        k = TwistVector.of("5/2")
        assert untwisted_product(k, x ** 2, y ** 2) == mul_assoc(x ** 2, y ** 2)

    @settings(max_examples=40, deadline=None)
    @given(twists(1), polys(1, 3), polys(1, 3), polys(1, 3))
    def test_hom_associative_n1(self, k, a, b, c):
        """alpha(a) * (b * c) = (a * b) * alpha(c)"""
        assert hom_assoc_defect(k, a, b, c).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(twists(2), polys(2), polys(2), polys(2))
    def test_hom_associative_n2(self, k, a, b, c):
        """Hom-associativity in A_2^k"""
        assert hom_assoc_defect(k, a, b, c).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(twists(2), polys(2).filter(lambda p: not p.is_zero()), polys(2).filter(lambda p: not p.is_zero()))
    def test_no_zero_divisors(self, k, p, q):
        """p * q is nonzero whenever p and q are"""
        assert not star(k, p, q).is_zero()


class TestOreStar:
    """The star product built as an iterated differential polynomial ring"""

    def test_x_star_y(self):
        """x * y = y x + x + 1 for k = 1"""
        assert ore_star(TwistVector.of(1), x, y) == yx + x + 1

    def test_x_squared_y_squared(self):
        """x^2 y^2 = y^2 x^2 + 4 y x + 2 when k = 0"""
        assert ore_star(TwistVector.zeros(1), x ** 2, y ** 2) == mul_assoc(x ** 2, y ** 2)

    def test_dimension_mismatch(self):
        """k and the operands must share n"""
        with pytest.raises(DimensionError):
            ore_star(TwistVector.of(1, 1), x, y)

    @settings(max_examples=40, deadline=None)
    @given(twists(1), polys(1, 3, 3), polys(1, 3, 3))
    def test_agrees_with_star_n1(self, k, p, q):
        """ore_star = star in A_1^k"""
        assert ore_star(k, p, q) == star(k, p, q)

    @settings(max_examples=30, deadline=None)
    @given(twists(3), polys(3, 2, 3), polys(3, 2, 3))
    def test_agrees_with_star_n3(self, k, p, q):
        """ore_star = star in A_3^k"""
        assert ore_star(k, p, q) == star(k, p, q)


class TestWeakUnit:
    """1 is the weak identity"""

    @settings(max_examples=30, deadline=None)
    @given(twists(2), polys(2))
    def test_weak_unit(self, k, a):
        """a * 1 = 1 * a = alpha(a)"""
        right, left = weak_unit_defect(k, a)
        assert right.is_zero() and left.is_zero()

    def test_is_weak_identity(self):
        """1 passes, y and 2 do not"""
        k = TwistVector.of(1)
        probes = [x, y, yx, y ** 2 + 3]
        assert is_weak_identity(k, WeylPoly.one(1), probes)
        assert not is_weak_identity(k, y, probes)
        assert not is_weak_identity(k, WeylPoly.constant(1, 2), probes)


class TestCommutatorAndAssociator:
    """Star commutator, associator and the hom-Lie structure"""

    def test_commutator_of_generators(self):
        """[x, y]_* = alpha(1) = 1"""
        assert commutator_star(TwistVector.of(7), x, y) == 1

    @settings(max_examples=30, deadline=None)
    @given(twists(2), polys(2), polys(2))
    def test_commutator_is_twisted_commutator(self, k, p, q):
        """[p, q]_* = alpha_k([p, q])"""
        assert commutator_identity_defect(k, p, q).is_zero()

    @settings(max_examples=20, deadline=None)
    @given(twists(2), polys(2, 1), polys(2, 1), polys(2, 1))
    def test_hom_lie(self, k, a, b, c):
        """The star commutator is alternating and satisfies hom-Jacobi"""
        alternating, jacobi = hom_lie_defects(k, a, b, c)
        assert alternating.is_zero()
        assert jacobi.is_zero()

    def test_associator_lowest_term(self):
        """(yx * yx) * yx - yx * (yx * yx) has lowest term k x"""
        k = TwistVector.of(3)
        defect = associator_star(k, yx, yx, yx)
        assert lowest_degree_part(defect) == 3 * x

    def test_power_associative_when_untwisted_index(self):
        """The associator vanishes when k_l = 0 even if other entries are nonzero"""
        k = TwistVector.of(0, 2)
        a = mul_assoc(WeylPoly.y(2, 1), WeylPoly.x(2, 1))
        assert associator_star(k, a, a, a).is_zero()

    def test_alternativity(self):
        """All three alternativity defects vanish for k = 0 and fail on yx for k != 0"""
        assert all(d.is_zero() for d in alternativity_defects(TwistVector.zeros(1), yx, x + y))
        assert all(not d.is_zero() for d in alternativity_defects(TwistVector.of(1), yx, yx))

    def test_associator_with_weak_unit(self):
        """(x * 1) * y - x * (1 * y) = -k x"""
        k = TwistVector.of(2)
        assert associator_star(k, x, WeylPoly.one(1), y) == -2 * x
        assert apply_twist(k, y) == y + 2
