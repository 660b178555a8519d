"""
The hom-associative Weyl algebra A_n^k.

The star product is the Yau twist of the associative product,
p * q = alpha_k(pq). Every check here returns the full defect polynomial
rather than a boolean so that a failing identity shows where it fails.
"""
import itertools
import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .arith import NormalMonomial, WeylPoly, add, commutator, linear_combination, mul_assoc, partial_y, scale
from .errors import DimensionError
from .twist import TwistVector, apply_twist, twist_power

logger = logging.getLogger(__name__)


def star(k: TwistVector, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """p * q = alpha_k(pq); equals the associative product when k = 0."""
    return apply_twist(k, mul_assoc(p, q))


def untwisted_product(k: TwistVector, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """Recover pq from the star product: pq = alpha_{-k}(p * q)."""
    return twist_power(k, -1, star(k, p, q))


def hom_assoc_defect(k: TwistVector, a: WeylPoly, b: WeylPoly, c: WeylPoly) -> WeylPoly:
    """alpha(a) * (b * c) - (a * b) * alpha(c); always zero in A_n^k."""
    left = star(k, apply_twist(k, a), star(k, b, c))
    right = star(k, star(k, a, b), apply_twist(k, c))
    return add(left, scale(-1, right))


def weak_unit_defect(k: TwistVector, a: WeylPoly) -> Tuple[WeylPoly, WeylPoly]:
    """(a * 1 - alpha(a), 1 * a - alpha(a)); both zero because 1 is the weak identity."""
    one = WeylPoly.one(a.n)
    target = apply_twist(k, a)
    return (
        add(star(k, a, one), scale(-1, target)),
        add(star(k, one, a), scale(-1, target)),
    )


def is_weak_identity(k: TwistVector, e: WeylPoly, probes: Iterable[WeylPoly]) -> bool:
    """
    Check a * e = e * a = alpha(a) on a finite probe set.

    Args:
        k: Twist vector
        e: Candidate weak identity
        probes: Elements a to test against

    Returns:
        True if every probe satisfies both weak-identity equations
    """
    for a in probes:
        target = apply_twist(k, a)
        if star(k, a, e) != target or star(k, e, a) != target:
            return False
    return True


def commutator_star(k: TwistVector, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """[p, q]_* = p * q - q * p."""
    return add(star(k, p, q), scale(-1, star(k, q, p)))


def associator_star(k: TwistVector, a: WeylPoly, b: WeylPoly, c: WeylPoly) -> WeylPoly:
    """(a * b) * c - a * (b * c)."""
    return add(star(k, star(k, a, b), c), scale(-1, star(k, a, star(k, b, c))))


def alternativity_defects(k: TwistVector, a: WeylPoly, b: WeylPoly) -> Tuple[WeylPoly, WeylPoly, WeylPoly]:
    """Left alternative (a,a,b), right alternative (b,a,a) and flexible (a,b,a) star associators."""
    return (
        associator_star(k, a, a, b),
        associator_star(k, b, a, a),
        associator_star(k, a, b, a),
    )


def hom_lie_defects(k: TwistVector, a: WeylPoly, b: WeylPoly, c: WeylPoly) -> Tuple[WeylPoly, WeylPoly]:
    """
    Alternativity and hom-Jacobi defects of the star commutator with twist alpha_k.

    Returns:
        ([a, a]_*, [alpha(a), [b, c]_*]_* + [alpha(c), [a, b]_*]_* + [alpha(b), [c, a]_*]_*)
    """
    alternating = commutator_star(k, a, a)
    jacobi = WeylPoly.zero(a.n)
    for u, v, w in ((a, b, c), (c, a, b), (b, c, a)):
        jacobi = add(jacobi, commutator_star(k, apply_twist(k, u), commutator_star(k, v, w)))
    return alternating, jacobi


def commutator_identity_defect(k: TwistVector, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """[p, q]_* - alpha_k([p, q]); the star commutator is the twisted classical one."""
    return add(commutator_star(k, p, q), scale(-1, apply_twist(k, commutator(p, q))))


def _x_coefficients(p: WeylPoly) -> Dict[Tuple[int, ...], WeylPoly]:
    # p = sum_b r_b(y) x^b
    grouped: Dict[Tuple[int, ...], Dict[NormalMonomial, Fraction]] = {}
    one_x = (0,) * p.n
    for mono, coeff in p:
        grouped.setdefault(mono.xexp, {})[NormalMonomial(mono.yexp, one_x)] = coeff
    return {xexp: WeylPoly(p.n, terms) for xexp, terms in grouped.items()}


def _times_x(p: WeylPoly, xexp: Tuple[int, ...]) -> WeylPoly:
    # p carries no x, so right multiplication by x^xexp only sets the x-block
    return WeylPoly(p.n, {NormalMonomial(mono.yexp, xexp): coeff for mono, coeff in p})


def _partial_y_power(s: WeylPoly, orders: Tuple[int, ...]) -> WeylPoly:
    for ell, order in enumerate(orders, start=1):
        for _ in range(order):
            if s.is_zero():
                return s
            s = partial_y(s, ell)
    return s


def ore_star(k: TwistVector, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """
    Star product computed as an iterated differential polynomial ring.

    A_n is built from Q[y_1..y_n] by adjoining x_1..x_n with x_m r = r x_m + d r/d y_m,
    so for y-polynomials r and s

        (r x^b)(s x^c) = sum over l <= b of prod_m C(b_m, l_m) * r * d^{b-l}s/dy^{b-l} * x^{l+c}

    and the result is twisted by alpha_k. Products are only ever taken between
    commuting y-polynomials, and the result agrees with `star` on every input.

    Args:
        k: Twist vector
        p: Left factor
        q: Right factor

    Returns:
        p * q in A_n^k
    """
    if not (k.n == p.n == q.n):
        raise DimensionError(f"dimension mismatch: k has {k.n}, factors have {p.n} and {q.n}")
    n = p.n
    pieces = []
    right = _x_coefficients(q)
    for b, r in _x_coefficients(p).items():
        for ell in itertools.product(*(range(b_m + 1) for b_m in b)):
            weight = math.prod(math.comb(b_m, l_m) for b_m, l_m in zip(b, ell))
            orders = tuple(b_m - l_m for b_m, l_m in zip(b, ell))
            for c, s in right.items():
                derived = _partial_y_power(s, orders)
                if derived.is_zero():
                    continue
                xexp = tuple(l_m + c_m for l_m, c_m in zip(ell, c))
                pieces.append((weight, _times_x(mul_assoc(r, derived), xexp)))
    return apply_twist(k, linear_combination(n, pieces))
