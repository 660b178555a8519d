"""
Exact normal-ordered arithmetic in the Weyl algebra A_n over the rationals.

Elements are sparse linear combinations of normal-ordered monomials
y_1^{i_1}...y_n^{i_n} x_1^{j_1}...x_n^{j_n} with Fraction coefficients.
The generators satisfy [x_i, y_j] = delta_ij, every other pair commutes.
A second, independent multiplication (`oracle_mul`) rewrites free words
letter by letter and serves as a brute-force reference.
"""
import itertools
import logging
import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from sympy.polys.orderings import monomial_key

from .errors import DimensionError, IndexRangeError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_grlex = monomial_key("grlex")


def as_coefficient(value: Union[Rational, str]) -> Fraction:
    """
    Convert an integer, Fraction or "p/q" string into an exact coefficient.

    Args:
        value: Integer, Fraction, or text of the form "p", "p/q", "-p/q"

    Returns:
        Fraction in lowest terms
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE_"):
            raise ValueError(f"not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer and supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()

Degree = Union[int, _MinusInfinity]


class NormalMonomial(NamedTuple):
    """Basis element y^yexp x^xexp, y-block strictly before the x-block."""

    yexp: Tuple[int, ...]
    xexp: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.yexp)

    @property
    def total_degree(self) -> int:
        return sum(self.yexp) + sum(self.xexp)

    def sort_key(self):
        return _grlex(self.yexp + self.xexp)

    @classmethod
    def one(cls, n: int) -> "NormalMonomial":
        return cls((0,) * n, (0,) * n)


def _unit(n: int, ell: int) -> Tuple[int, ...]:
    return tuple(1 if i == ell - 1 else 0 for i in range(n))


def check_index(ell: int, n: int) -> None:
    """Raise IndexRangeError unless 1 <= ell <= n."""
    if not isinstance(ell, int) or isinstance(ell, bool) or not 1 <= ell <= n:
        raise IndexRangeError(f"generator index {ell} outside 1..{n}")


class WeylPoly:
    """
    Immutable element of A_n: a finite association NormalMonomial -> Fraction.

    Zero coefficients are never stored, so equality is term-by-term equality.
    Iteration and printing follow descending graded-lexicographic order.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[NormalMonomial, Rational]] = None):
        if not isinstance(n, int) or n < 1:
            raise DimensionError(f"dimension must be a positive integer, got {n!r}")
        cleaned: Dict[NormalMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = NormalMonomial(tuple(mono[0]), tuple(mono[1]))
            if len(mono.yexp) != n or len(mono.xexp) != n:
                raise DimensionError(f"monomial {mono} does not have dimension {n}")
            if any(e < 0 for e in mono.yexp + mono.xexp):
                raise ValueError(f"negative exponent in {mono}")
            value = as_coefficient(coeff)
            if value:
                cleaned[mono] = cleaned.get(mono, Fraction(0)) + value
                if not cleaned[mono]:
                    del cleaned[mono]
        self._n = n
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, terms: Dict[NormalMonomial, Fraction]) -> "WeylPoly":
        # terms must already be free of zero coefficients
        poly = object.__new__(cls)
        poly._n = n
        poly._terms = terms
        poly._hash = None
        return poly

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "WeylPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: Rational) -> "WeylPoly":
        return cls(n, {NormalMonomial.one(n): value})

    @classmethod
    def one(cls, n: int) -> "WeylPoly":
        return cls.constant(n, 1)

    @classmethod
    def monomial(cls, n: int, yexp: Sequence[int], xexp: Sequence[int], coeff: Rational = 1) -> "WeylPoly":
        return cls(n, {NormalMonomial(tuple(yexp), tuple(xexp)): coeff})

    @classmethod
    def y(cls, n: int, ell: int) -> "WeylPoly":
        check_index(ell, n)
        return cls.monomial(n, _unit(n, ell), (0,) * n)

    @classmethod
    def x(cls, n: int, ell: int) -> "WeylPoly":
        check_index(ell, n)
        return cls.monomial(n, (0,) * n, _unit(n, ell))

    @classmethod
    def generators(cls, n: int) -> List["WeylPoly"]:
        """All 2n generators, x_1..x_n followed by y_1..y_n."""
        return [cls.x(n, ell) for ell in range(1, n + 1)] + [cls.y(n, ell) for ell in range(1, n + 1)]

    # -- accessors ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    def terms(self) -> List[Tuple[NormalMonomial, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key(), reverse=True)

    def items(self):
        return self._terms.items()

    def monomials(self) -> Iterable[NormalMonomial]:
        return self._terms.keys()

    def coefficient(self, mono: NormalMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(mono.total_degree == 0 for mono in self._terms)

    def scalar_value(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return self._terms.get(NormalMonomial.one(self._n), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[NormalMonomial, Fraction]]:
        return iter(self.terms())

    # -- operators ----------------------------------------------------------

    def _coerce(self, other) -> "WeylPoly":
        if isinstance(other, WeylPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return WeylPoly.constant(self._n, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "WeylPoly":
        return scale(-1, self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, scale(-1, other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, scale(-1, self))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(other, self)
        if isinstance(other, WeylPoly):
            return mul_assoc(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, exponent: int) -> "WeylPoly":
        return power(self, exponent)

    def __repr__(self) -> str:
        return f"WeylPoly(n={self._n}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _require_same_n(*polys: WeylPoly) -> int:
    n = polys[0].n
    for poly in polys[1:]:
        if poly.n != n:
            raise DimensionError(f"dimension mismatch: {n} vs {poly.n}")
    return n


def add(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """Term-wise sum; cancelled terms are dropped."""
    _require_same_n(p, q)
    result = dict(p._terms)
    for mono, coeff in q._terms.items():
        value = result.get(mono, 0) + coeff
        if value:
            result[mono] = value
        else:
            result.pop(mono, None)
    return WeylPoly._trusted(p.n, result)


def scale(c: Rational, p: WeylPoly) -> WeylPoly:
    """Multiply every coefficient of p by c."""
    c = as_coefficient(c)
    if not c:
        return WeylPoly.zero(p.n)
    return WeylPoly._trusted(p.n, {mono: c * coeff for mono, coeff in p._terms.items()})


def linear_combination(n: int, pairs: Iterable[Tuple[Rational, WeylPoly]]) -> WeylPoly:
    """Sum of c * p over the given pairs, accumulated in one dictionary."""
    result: Dict[NormalMonomial, Fraction] = {}
    for c, poly in pairs:
        if poly.n != n:
            raise DimensionError(f"dimension mismatch: {n} vs {poly.n}")
        c = as_coefficient(c)
        if not c:
            continue
        for mono, coeff in poly._terms.items():
            result[mono] = result.get(mono, 0) + c * coeff
    return WeylPoly._trusted(n, {mono: coeff for mono, coeff in result.items() if coeff})


@lru_cache(maxsize=1 << 16)
def _monomial_product(a: NormalMonomial, b: NormalMonomial) -> Tuple[Tuple[NormalMonomial, int], ...]:
    # (y^a1 x^i)(y^c x^j): per index m, x_m^i y_m^c = sum_r C(i, r) c!/(c-r)! y_m^(c-r) x_m^(i-r)
    ranges = [range(min(i, c) + 1) for i, c in zip(a.xexp, b.yexp)]
    products = []
    for r in itertools.product(*ranges):
        weight = 1
        for i_m, c_m, r_m in zip(a.xexp, b.yexp, r):
            weight *= math.comb(i_m, r_m) * math.perm(c_m, r_m)
        yexp = tuple(ya + yc - r_m for ya, yc, r_m in zip(a.yexp, b.yexp, r))
        xexp = tuple(xi - r_m + xj for xi, xj, r_m in zip(a.xexp, b.xexp, r))
        products.append((NormalMonomial(yexp, xexp), weight))
    return tuple(products)


def mul_assoc(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """
    Associative product of A_n in normal order.

    Args:
        p: Left factor
        q: Right factor

    Returns:
        p*q written in the basis y^a x^b
    """
    n = _require_same_n(p, q)
    result: Dict[NormalMonomial, Fraction] = {}
    for ma, ca in p._terms.items():
        for mb, cb in q._terms.items():
            c = ca * cb
            for mono, weight in _monomial_product(ma, mb):
                result[mono] = result.get(mono, 0) + c * weight
    return WeylPoly._trusted(n, {mono: coeff for mono, coeff in result.items() if coeff})


def power(p: WeylPoly, exponent: int) -> WeylPoly:
    """p multiplied with itself exponent times; p^0 = 1."""
    if not isinstance(exponent, int) or exponent < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
    result = WeylPoly.one(p.n)
    base = p
    while exponent:
        if exponent & 1:
            result = mul_assoc(result, base)
        exponent >>= 1
        if exponent:
            base = mul_assoc(base, base)
    return result


def commutator(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """[p, q] = pq - qp in A_n."""
    return add(mul_assoc(p, q), scale(-1, mul_assoc(q, p)))


def _partial(p: WeylPoly, ell: int, on_y: bool) -> WeylPoly:
    check_index(ell, p.n)
    pos = ell - 1
    result: Dict[NormalMonomial, Fraction] = {}
    for mono, coeff in p._terms.items():
        exps = mono.yexp if on_y else mono.xexp
        e = exps[pos]
        if e == 0:
            continue
        lowered = exps[:pos] + (e - 1,) + exps[pos + 1:]
        target = NormalMonomial(lowered, mono.xexp) if on_y else NormalMonomial(mono.yexp, lowered)
        result[target] = coeff * e
    return WeylPoly._trusted(p.n, result)


def partial_y(p: WeylPoly, ell: int) -> WeylPoly:
    """Formal partial derivative with respect to y_ell."""
    return _partial(p, ell, on_y=True)


def partial_x(p: WeylPoly, ell: int) -> WeylPoly:
    """Formal partial derivative with respect to x_ell."""
    return _partial(p, ell, on_y=False)


def deg_y(p: WeylPoly, i: int) -> Degree:
    check_index(i, p.n)
    if p.is_zero():
        return MINUS_INFINITY
    return max(mono.yexp[i - 1] for mono in p.monomials())


def deg_x(p: WeylPoly, j: int) -> Degree:
    check_index(j, p.n)
    if p.is_zero():
        return MINUS_INFINITY
    return max(mono.xexp[j - 1] for mono in p.monomials())


def total_degree(p: WeylPoly) -> Degree:
    if p.is_zero():
        return MINUS_INFINITY
    return max(mono.total_degree for mono in p.monomials())


def lowest_degree_part(p: WeylPoly) -> WeylPoly:
    """Terms of p whose total degree is minimal."""
    if p.is_zero():
        return p
    low = min(mono.total_degree for mono in p.monomials())
    return WeylPoly._trusted(p.n, {m: c for m, c in p.items() if m.total_degree == low})


# -- printing -----------------------------------------------------------------


def _format_power(symbol: str, exponent: int) -> str:
    return symbol if exponent == 1 else f"{symbol}^{exponent}"


def format_monomial(mono: NormalMonomial) -> str:
    """Factors of a monomial joined by '*'; the empty monomial prints as ''."""
    factors = [_format_power(f"y{i + 1}", e) for i, e in enumerate(mono.yexp) if e]
    factors += [_format_power(f"x{i + 1}", e) for i, e in enumerate(mono.xexp) if e]
    return "*".join(factors)


def format_coefficient(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_signed_terms(pieces: Iterable[Tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial text) pairs into 'a - b + c'; empty input prints '0'."""
    out = []
    for coeff, body in pieces:
        magnitude = abs(coeff)
        if not body:
            text = format_coefficient(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{format_coefficient(magnitude)}*{body}"
        if not out:
            out.append(f"-{text}" if coeff < 0 else text)
        else:
            out.append(f" - {text}" if coeff < 0 else f" + {text}")
    return "".join(out) if out else "0"


def format_poly(p: WeylPoly) -> str:
    """Canonical text of p, e.g. 'y1*x1 + x1 + 1'."""
    return format_signed_terms((coeff, format_monomial(mono)) for mono, coeff in p.terms())


# -- free-word oracle ---------------------------------------------------------


class Letter(NamedTuple):
    """One symbol of a free word: X(ell), Y(ell) or SCALAR(c)."""

    kind: str
    index: int = 0
    value: Fraction = Fraction(1)


def X(ell: int) -> Letter:
    return Letter("x", ell)


def Y(ell: int) -> Letter:
    return Letter("y", ell)


def SCALAR(c: Rational) -> Letter:
    return Letter("scalar", 0, as_coefficient(c))


FreeWord = Tuple[Letter, ...]


def word_of(mono: NormalMonomial) -> FreeWord:
    """The free word y_1^{i_1}...y_n^{i_n} x_1^{j_1}...x_n^{j_n} of a monomial."""
    letters: List[Letter] = []
    for i, e in enumerate(mono.yexp):
        letters.extend([Y(i + 1)] * e)
    for i, e in enumerate(mono.xexp):
        letters.extend([X(i + 1)] * e)
    return tuple(letters)


def _rank(letter: Letter) -> Tuple[int, int]:
    return (0 if letter.kind == "y" else 1, letter.index)


def oracle_normal_form(word: Sequence[Letter], n: int) -> WeylPoly:
    """
    Normal form of a free word by rewriting adjacent pairs.

    x_i y_j -> y_j x_i + delta_ij; commuting letters out of index order are swapped;
    scalars are pulled out into the coefficient.

    Args:
        word: Sequence of letters
        n: Dimension of the algebra

    Returns:
        The element of A_n the word represents
    """
    coeff = Fraction(1)
    letters: List[Letter] = []
    for letter in word:
        if letter.kind == "scalar":
            coeff *= letter.value
        elif letter.kind in ("x", "y"):
            check_index(letter.index, n)
            letters.append(letter)
        else:
            raise ValueError(f"unknown letter kind {letter.kind!r}")

    normal: Dict[FreeWord, Fraction] = {}
    work: Dict[FreeWord, Fraction] = {tuple(letters): coeff} if coeff else {}
    while work:
        current, c = work.popitem()
        pos = next((i for i in range(len(current) - 1) if _rank(current[i]) > _rank(current[i + 1])), None)
        if pos is None:
            normal[current] = normal.get(current, 0) + c
            continue
        a, b = current[pos], current[pos + 1]
        swapped = current[:pos] + (b, a) + current[pos + 2:]
        work[swapped] = work.get(swapped, 0) + c
        if a.kind == "x" and b.kind == "y" and a.index == b.index:
            shorter = current[:pos] + current[pos + 2:]
            work[shorter] = work.get(shorter, 0) + c

    terms: Dict[NormalMonomial, Fraction] = {}
    for letters_, c in normal.items():
        yexp = [0] * n
        xexp = [0] * n
        for letter in letters_:
            (yexp if letter.kind == "y" else xexp)[letter.index - 1] += 1
        mono = NormalMonomial(tuple(yexp), tuple(xexp))
        terms[mono] = terms.get(mono, 0) + c
    return WeylPoly(n, terms)


def oracle_mul(w1: Sequence[Letter], w2: Sequence[Letter], n: int) -> WeylPoly:
    """Normal form of the concatenation w1 w2; reference implementation for mul_assoc."""
    return oracle_normal_form(tuple(w1) + tuple(w2), n)
