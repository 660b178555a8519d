"""
The twisting endomorphism alpha_k of A_n: y_l -> y_l + k_l, x_l -> x_l.

`apply_twist` substitutes the shift directly (binomial expansion of every
y-power). `twist_via_exp` evaluates the exponential series of the derivation
sum_l k_l d/dy_l, which terminates on every polynomial. The two paths share no
code beyond `partial_y` and are compared in the tests.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

from .arith import NormalMonomial, Rational, WeylPoly, add, as_coefficient, check_index, partial_y, scale
from .errors import DimensionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistVector:
    """The constant k in Q^n that parameterizes alpha_k and A_n^k."""

    k: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(as_coefficient(v) for v in self.k)
        if not values:
            raise DimensionError("a twist vector needs at least one entry")
        object.__setattr__(self, "k", values)

    @classmethod
    def of(cls, *values: Union[Rational, str]) -> "TwistVector":
        return cls(tuple(values))

    @classmethod
    def zeros(cls, n: int) -> "TwistVector":
        return cls((0,) * n)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "TwistVector":
        """
        Parse comma-separated rationals such as "1,0,3/2".

        Args:
            text: Comma-separated integers or p/q fractions
            n: Expected length; a single entry is broadcast to length n

        Returns:
            TwistVector
        """
        parts = [part.strip() for part in text.split(",") if part.strip()]
        if not parts:
            raise ValueError("empty twist vector")
        values = [as_coefficient(part) for part in parts]
        if n is not None:
            if len(values) == 1 and n > 1:
                values = values * n
            elif len(values) != n:
                raise DimensionError(f"twist vector has {len(values)} entries, expected {n}")
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.k)

    def entry(self, ell: int) -> Fraction:
        """k_ell, 1-based."""
        check_index(ell, self.n)
        return self.k[ell - 1]

    def zero_set(self) -> FrozenSet[int]:
        """Indices ell (1-based) with k_ell = 0."""
        return frozenset(i + 1 for i, v in enumerate(self.k) if v == 0)

    def nonzero_set(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, v in enumerate(self.k) if v != 0)

    def is_zero(self) -> bool:
        return not any(self.k)

    def scaled(self, factor: Rational) -> "TwistVector":
        return TwistVector(tuple(factor * v for v in self.k))

    def __neg__(self) -> "TwistVector":
        return self.scaled(-1)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.k)


def _check_dims(k: TwistVector, p: WeylPoly) -> None:
    if k.n != p.n:
        raise DimensionError(f"twist vector of length {k.n} applied to an element of A_{p.n}")


@lru_cache(maxsize=1 << 14)
def _shifted_ypowers(yexp: Tuple[int, ...], k: Tuple[Fraction, ...]) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    # prod_m (y_m + k_m)^{a_m} = sum_{r <= a} prod_m C(a_m, r_m) k_m^{r_m} y^{a - r}
    ranges = [range(a + 1) if km else range(1) for a, km in zip(yexp, k)]
    out = []
    for r in itertools.product(*ranges):
        weight = Fraction(1)
        for a, km, r_m in zip(yexp, k, r):
            if r_m:
                weight *= math.comb(a, r_m) * km ** r_m
        out.append((tuple(a - r_m for a, r_m in zip(yexp, r)), weight))
    return tuple(out)


def apply_twist(k: TwistVector, p: WeylPoly) -> WeylPoly:
    """
    Image of p under alpha_k, computed by the binomial shift of every y-exponent.

    Args:
        k: Twist vector of length p.n
        p: Element of A_n

    Returns:
        alpha_k(p)
    """
    _check_dims(k, p)
    if k.is_zero():
        return p
    result: Dict[NormalMonomial, Fraction] = {}
    for mono, coeff in p.items():
        for yexp, weight in _shifted_ypowers(mono.yexp, k.k):
            target = NormalMonomial(yexp, mono.xexp)
            result[target] = result.get(target, 0) + coeff * weight
    return WeylPoly(p.n, result)


def _directional_derivative(k: TwistVector, p: WeylPoly) -> WeylPoly:
    total = WeylPoly.zero(p.n)
    for ell, km in enumerate(k.k, start=1):
        if km:
            total = add(total, scale(km, partial_y(p, ell)))
    return total


def twist_via_exp(k: TwistVector, p: WeylPoly) -> WeylPoly:
    """sum_i (k d/dy)^i p / i!, which stops once the derivative vanishes."""
    _check_dims(k, p)
    total = p
    term = p
    i = 0
    while not term.is_zero():
        i += 1
        term = scale(Fraction(1, i), _directional_derivative(k, term))
        total = add(total, term)
    logger.debug(f"exponential twist terminated after {i} derivative steps")
    return total


def shift_variable(p: WeylPoly, ell: int, c: Rational) -> WeylPoly:
    """Substitute y_ell -> y_ell + c and leave every other generator fixed."""
    check_index(ell, p.n)
    k = [0] * p.n
    k[ell - 1] = c
    return apply_twist(TwistVector(tuple(k)), p)


def twist_sequential(k: TwistVector, p: WeylPoly, order: Optional[Sequence[int]] = None) -> WeylPoly:
    """alpha_k as a composition of single-variable shifts, taken in the given index order."""
    _check_dims(k, p)
    for ell in order if order is not None else range(1, k.n + 1):
        p = shift_variable(p, ell, k.entry(ell))
    return p


def twist_power(k: TwistVector, i: int, p: WeylPoly) -> WeylPoly:
    """alpha_k^i(p) = alpha_{ik}(p); negative i gives powers of the inverse alpha_{-k}."""
    _check_dims(k, p)
    return apply_twist(k.scaled(i), p)
