"""Seeded random elements, twist vectors and monomial enumerations for the property suites."""
import itertools
import random
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .arith import NormalMonomial, WeylPoly
from .twist import TwistVector

TWIST_PATTERNS = ("zero", "one", "all", "mixed")

_NUMERATORS = [v for v in range(-4, 5) if v]


def random_coefficient(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMERATORS), rng.randint(1, 3))


def random_monomial(rng: random.Random, n: int, degree_cap: int) -> NormalMonomial:
    """Total degree uniform in 0..degree_cap, spread over the 2n exponent slots."""
    exps = [0] * (2 * n)
    for _ in range(rng.randint(0, degree_cap)):
        exps[rng.randrange(2 * n)] += 1
    return NormalMonomial(tuple(exps[:n]), tuple(exps[n:]))


def random_poly(
    rng: random.Random,
    n: int,
    degree_cap: int,
    max_terms: int = 3,
    nonzero: bool = False,
) -> WeylPoly:
    """
    Random element of A_n with at most max_terms monomials of total degree <= degree_cap.

    Args:
        rng: Source of randomness
        n: Dimension
        degree_cap: Largest total degree of a term
        max_terms: Largest number of sampled terms
        nonzero: Resample until the result is nonzero

    Returns:
        WeylPoly
    """
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            mono = random_monomial(rng, n, degree_cap)
            terms[mono] = terms.get(mono, 0) + random_coefficient(rng)
        p = WeylPoly(n, terms)
        if not nonzero or not p.is_zero():
            return p


def random_twist(rng: random.Random, n: int, pattern: str = "mixed") -> TwistVector:
    """
    Twist vector with a given zero pattern.

    pattern "zero" is all zeros, "one" has a single nonzero entry, "all" has no
    zero entry, "mixed" picks each entry zero or nonzero at random.
    """
    if pattern not in TWIST_PATTERNS:
        raise ValueError(f"unknown twist pattern {pattern!r}; expected one of {TWIST_PATTERNS}")
    values = [Fraction(0)] * n
    if pattern == "one":
        values[rng.randrange(n)] = random_coefficient(rng)
    elif pattern == "all":
        values = [random_coefficient(rng) for _ in range(n)]
    elif pattern == "mixed":
        values = [random_coefficient(rng) if rng.random() < 0.5 else Fraction(0) for _ in range(n)]
    return TwistVector(tuple(values))


def random_twist_with_nonzero_count(rng: random.Random, n: int, count: int) -> TwistVector:
    """Twist vector with exactly `count` nonzero entries at random positions."""
    positions = set(rng.sample(range(n), count))
    return TwistVector(tuple(random_coefficient(rng) if i in positions else Fraction(0) for i in range(n)))


def random_twist_pair(rng: random.Random, n: int, same_count: bool = True) -> Tuple[TwistVector, TwistVector]:
    """(k, k') with equal nonzero counts, or with different counts when same_count is False."""
    count = rng.randint(0, n)
    if same_count:
        other = count
    else:
        other = rng.choice([c for c in range(n + 1) if c != count])
    return random_twist_with_nonzero_count(rng, n, count), random_twist_with_nonzero_count(rng, n, other)


def monomials_of_degree(n: int, degree: int) -> Iterator[NormalMonomial]:
    for split in itertools.combinations_with_replacement(range(2 * n), degree):
        exps = [0] * (2 * n)
        for slot in split:
            exps[slot] += 1
        yield NormalMonomial(tuple(exps[:n]), tuple(exps[n:]))


def monomials_up_to(n: int, degree: int) -> List[NormalMonomial]:
    """Every normal monomial of A_n with total degree <= degree."""
    return [mono for d in range(degree + 1) for mono in monomials_of_degree(n, d)]


def make_rng(seed: Optional[int], salt: str = "") -> random.Random:
    """Independent generator per suite, derived from a common seed."""
    return random.Random(f"{seed or 0}:{salt}")
