"""
Multi-parameter formal deformations of A_n.

The twist alpha_k = exp(sum_s k_s d/dy_{pos_s}) and the star product become
polynomials in formal parameters t_1..t_m once the nonzero entries of k are
replaced by indeterminates. Series are stored exactly; on polynomial inputs
they are finite.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import (
    WeylPoly,
    add,
    as_coefficient,
    check_index,
    commutator,
    deg_y,
    format_monomial,
    format_signed_terms,
    linear_combination,
    mul_assoc,
    partial_y,
    scale,
)
from .errors import DimensionError
from .twist import TwistVector

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class ParamMap:
    """Parameter slot s (0-based) deforms the shift of y_{positions[s]} (1-based)."""

    positions: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        if len(set(self.positions)) != len(self.positions):
            raise ValueError(f"parameter positions must be distinct: {self.positions}")

    @classmethod
    def for_twist(cls, k: TwistVector) -> "ParamMap":
        """One parameter per nonzero entry of k, in index order."""
        return cls(tuple(sorted(k.nonzero_set())))

    @property
    def m(self) -> int:
        return len(self.positions)

    def validate(self, n: int) -> None:
        for pos in self.positions:
            check_index(pos, n)

    def twist_vector(self, n: int, values: Sequence) -> TwistVector:
        """Place values at the mapped y-positions and zeros elsewhere."""
        if len(values) != self.m:
            raise DimensionError(f"expected {self.m} parameter values, got {len(values)}")
        self.validate(n)
        k = [Fraction(0)] * n
        for pos, value in zip(self.positions, values):
            k[pos - 1] = as_coefficient(value)
        return TwistVector(tuple(k))


class ParamPoly:
    """
    Polynomial in t_1..t_m with WeylPoly coefficients.

    The parameters are central: they commute with each other and with A_n.
    """

    __slots__ = ("_m", "_n", "_terms")

    def __init__(self, m: int, n: int, terms: Optional[Dict[MultiIndex, WeylPoly]] = None):
        cleaned: Dict[MultiIndex, WeylPoly] = {}
        for index, coeff in (terms or {}).items():
            index = tuple(index)
            if len(index) != m or any(i < 0 for i in index):
                raise DimensionError(f"multi-index {index} does not fit {m} parameters")
            if coeff.n != n:
                raise DimensionError(f"coefficient of dimension {coeff.n} in a series over A_{n}")
            if not coeff.is_zero():
                cleaned[index] = coeff
        self._m = m
        self._n = n
        self._terms = cleaned

    @classmethod
    def constant(cls, m: int, a: WeylPoly) -> "ParamPoly":
        return cls(m, a.n, {(0,) * m: a})

    @property
    def m(self) -> int:
        return self._m

    @property
    def n(self) -> int:
        return self._n

    def items(self) -> List[Tuple[MultiIndex, WeylPoly]]:
        """Terms ordered by total parameter order, then by multi-index."""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), tuple(-i for i in item[0])))

    def multi_indices(self) -> List[MultiIndex]:
        return [index for index, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "ParamPoly") -> None:
        if self._m != other._m or self._n != other._n:
            raise DimensionError(f"series shapes differ: (m={self._m}, n={self._n}) vs (m={other._m}, n={other._n})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._m == other._m and self._n == other._n and self._terms == other._terms

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        self._check(other)
        terms = dict(self._terms)
        for index, coeff in other._terms.items():
            terms[index] = add(terms[index], coeff) if index in terms else coeff
        return ParamPoly(self._m, self._n, terms)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self._m, self._n, {index: scale(-1, coeff) for index, coeff in self._terms.items()})

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        """Cauchy product; coefficients multiply with the associative product of A_n."""
        self._check(other)
        buckets: Dict[MultiIndex, List[Tuple[int, WeylPoly]]] = {}
        for ia, ca in self._terms.items():
            for ib, cb in other._terms.items():
                index = tuple(a + b for a, b in zip(ia, ib))
                buckets.setdefault(index, []).append((1, mul_assoc(ca, cb)))
        return ParamPoly(self._m, self._n, {index: linear_combination(self._n, pairs) for index, pairs in buckets.items()})

    def __repr__(self) -> str:
        return f"ParamPoly(m={self._m}, n={self._n}, {format_series(self)!r})"

    def __str__(self) -> str:
        return format_series(self)


def _check_map(pm: ParamMap, a: WeylPoly) -> None:
    pm.validate(a.n)


def deform_twist(a: WeylPoly, pm: ParamMap) -> ParamPoly:
    """
    Taylor expansion of the shift in the formal parameters.

    Args:
        a: Element of A_n
        pm: Parameter map

    Returns:
        sum over multi-indices i of t^i / i! * (d/dy_pos)^i a; the order-0 term is a
    """
    _check_map(pm, a)
    series: Dict[MultiIndex, WeylPoly] = {(0,) * pm.m: a}
    for slot, pos in enumerate(pm.positions):
        expanded: Dict[MultiIndex, WeylPoly] = {}
        for index, coeff in series.items():
            order = 0
            term = coeff
            while not term.is_zero():
                expanded[index[:slot] + (order,) + index[slot + 1:]] = term
                order += 1
                term = scale(Fraction(1, order), partial_y(term, pos))
        series = expanded
    return ParamPoly(pm.m, a.n, series)


def deform_star(a: WeylPoly, b: WeylPoly, pm: ParamMap) -> ParamPoly:
    """a * b as a series in the parameters; order 0 is the associative product."""
    return deform_twist(mul_assoc(a, b), pm)


def deform_bracket(a: WeylPoly, b: WeylPoly, pm: ParamMap) -> ParamPoly:
    """exp(t d/dy)[a, b]; order 0 is the commutator of A_n."""
    return deform_twist(commutator(a, b), pm)


def series_twist(series: ParamPoly, pm: ParamMap) -> ParamPoly:
    """Apply the deformed twist coefficient-wise to a whole series."""
    if series.m != pm.m:
        raise DimensionError(f"series in {series.m} parameters used with a map of {pm.m}")
    total = ParamPoly(pm.m, series.n)
    for index, coeff in series.items():
        shifted = {tuple(a + b for a, b in zip(index, inner)): c for inner, c in deform_twist(coeff, pm).items()}
        total = total + ParamPoly(pm.m, series.n, shifted)
    return total


def series_star(left: ParamPoly, right: ParamPoly, pm: ParamMap) -> ParamPoly:
    return series_twist(left * right, pm)


def series_bracket(left: ParamPoly, right: ParamPoly, pm: ParamMap) -> ParamPoly:
    return series_star(left, right, pm) - series_star(right, left, pm)


def specialize(series: ParamPoly, values: Sequence) -> WeylPoly:
    """Substitute t_s = values[s] exactly."""
    if len(values) != series.m:
        raise DimensionError(f"expected {series.m} parameter values, got {len(values)}")
    values = [as_coefficient(v) for v in values]
    pairs = []
    for index, coeff in series.items():
        weight = Fraction(1)
        for v, e in zip(values, index):
            weight *= v ** e
        pairs.append((weight, coeff))
    return linear_combination(series.n, pairs)


def order_term(series: ParamPoly, index: Sequence[int]) -> WeylPoly:
    """Coefficient of t^index (zero if absent)."""
    index = tuple(index)
    if len(index) != series.m:
        raise DimensionError(f"multi-index of length {len(index)} for {series.m} parameters")
    return series._terms.get(index, WeylPoly.zero(series.n))


def truncate(series: ParamPoly, order: int) -> ParamPoly:
    """Drop every term of total parameter order above `order`."""
    return ParamPoly(series.m, series.n, {index: c for index, c in series.items() if sum(index) <= order})


def finiteness_bound(product: WeylPoly, pm: ParamMap) -> int:
    """prod_s (1 + deg_{y_pos_s}(product)), an upper bound on the number of nonzero orders."""
    bound = 1
    for pos in pm.positions:
        degree = deg_y(product, pos)
        bound *= 1 + (degree if isinstance(degree, int) else 0)
    return bound


def _format_params(index: MultiIndex) -> str:
    factors = []
    for s, e in enumerate(index, start=1):
        if e == 1:
            factors.append(f"t{s}")
        elif e:
            factors.append(f"t{s}^{e}")
    return "*".join(factors)


def format_series(series: ParamPoly) -> str:
    """Expanded text such as 'y1*x1 + t1*x1'."""
    pieces: List[Tuple[Fraction, str]] = []
    for index, coeff in series.items():
        params = _format_params(index)
        for mono, c in coeff.terms():
            body = "*".join(part for part in (params, format_monomial(mono)) if part)
            pieces.append((c, body))
    return format_signed_terms(pieces)
