"""
Structural probes of A_n^k: inner derivations, the derivation criteria,
the simplicity reduction, and commuter/nuclei/center membership.

Membership in the commuter and the nuclei is a statement about all elements
of the algebra. The probes below decide it on finite witness sets that are
enough for A_n^k: the 2n generators for the commuter (alpha_k is injective and
the centralizer of the generators in A_n is K), and {1, y_1, ..., y_n} for the
nuclei (the associators against these witnesses already force k_l p = 0).
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple

from .arith import WeylPoly, add, commutator, deg_x, deg_y, scale
from .errors import DimensionError, ZeroInputError
from .homstar import associator_star, commutator_star
from .twist import TwistVector, apply_twist

logger = logging.getLogger(__name__)


def _check_dims(k: TwistVector, p: WeylPoly) -> None:
    if k.n != p.n:
        raise DimensionError(f"twist vector of length {k.n} used with an element of A_{p.n}")


def ad(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """Inner derivation ad_p(q) = [p, q] in the associative product."""
    return commutator(p, q)


def is_hom_derivation(k: TwistVector, p: WeylPoly) -> bool:
    """
    Structural test for ad_p in Der(A_n^k).

    Accepts p = sum_{k_i != 0} f_i y_i + q(y_{zero set of k}, x_1..x_n): every
    monomial that contains some y_i with k_i != 0 must be exactly y_i.

    Args:
        k: Twist vector
        p: Element of A_n defining ad_p

    Returns:
        True if p has the required shape
    """
    _check_dims(k, p)
    nonzero = [i - 1 for i in sorted(k.nonzero_set())]
    for mono in p.monomials():
        touched = [i for i in nonzero if mono.yexp[i]]
        if not touched:
            continue
        i = touched[0]
        if len(touched) > 1 or mono.yexp[i] != 1 or sum(mono.yexp) != 1 or any(mono.xexp):
            return False
    return True


def derivation_defect_on_generators(k: TwistVector, p: WeylPoly) -> List[WeylPoly]:
    """
    Generator-intertwining defects of ad_p.

    Returns:
        [ad_p(1)] followed by ad_p(alpha_k(g)) - alpha_k(ad_p(g)) for g in x_1..x_n, y_1..y_n;
        all entries vanish iff ad_p is a derivation of A_n^k
    """
    _check_dims(k, p)
    defects = [ad(p, WeylPoly.one(p.n))]
    for g in WeylPoly.generators(p.n):
        defects.append(add(ad(p, apply_twist(k, g)), scale(-1, apply_twist(k, ad(p, g)))))
    return defects


def is_shift_invariant_modulo_scalars(k: TwistVector, p: WeylPoly) -> bool:
    """ad_p commutes with alpha_k exactly when alpha_k(p) - p is a scalar."""
    _check_dims(k, p)
    return add(apply_twist(k, p), scale(-1, p)).is_scalar()


class ReductionStep(NamedTuple):
    """One move of the simplicity reduction.

    generator "x" means p -> [x_index, p]_*, generator "y" means p -> [p, y_index]_*.
    """

    generator: str
    index: int

    def apply(self, k: TwistVector, p: WeylPoly) -> WeylPoly:
        if self.generator == "x":
            return commutator_star(k, WeylPoly.x(p.n, self.index), p)
        return commutator_star(k, p, WeylPoly.y(p.n, self.index))

    @property
    def label(self) -> str:
        if self.generator == "x":
            return f"[x{self.index}, .]*"
        return f"[., y{self.index}]*"


class Reduction(NamedTuple):
    trace: List[ReductionStep]
    scalar: Fraction


def reduce_to_scalar(k: TwistVector, p: WeylPoly) -> Reduction:
    """
    Shrink a nonzero element to a nonzero scalar with star commutators against generators.

    y-degrees are removed first, in increasing index order, with [x_i, .]_*; then
    x-degrees, again in increasing index order, with [., y_j]_*. Each move lowers
    the total degree, so the trace is at most total_degree(p) long.

    Args:
        k: Twist vector
        p: Nonzero element of A_n^k

    Returns:
        Reduction(trace, scalar)
    """
    _check_dims(k, p)
    if p.is_zero():
        raise ZeroInputError("the simplicity reduction needs a nonzero element")
    trace: List[ReductionStep] = []
    for i in range(1, p.n + 1):
        while deg_y(p, i) > 0:
            step = ReductionStep("x", i)
            p = step.apply(k, p)
            trace.append(step)
    for j in range(1, p.n + 1):
        while deg_x(p, j) > 0:
            step = ReductionStep("y", j)
            p = step.apply(k, p)
            trace.append(step)
    logger.debug(f"reduced to scalar {p.scalar_value()} in {len(trace)} steps")
    return Reduction(trace, p.scalar_value())


def replay_trace(k: TwistVector, p: WeylPoly, trace: List[ReductionStep]) -> WeylPoly:
    for step in trace:
        p = step.apply(k, p)
    return p


def commuter_probe(k: TwistVector, p: WeylPoly) -> bool:
    """True iff p star-commutes with all 2n generators, i.e. p is a scalar."""
    _check_dims(k, p)
    return all(commutator_star(k, p, g).is_zero() for g in WeylPoly.generators(p.n))


class Nucleus(str, Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"


def nucleus_witness_defects(k: TwistVector, p: WeylPoly, which: Nucleus) -> List[WeylPoly]:
    """Associators of p against the witness set {1, y_1..y_n} in the given position."""
    _check_dims(k, p)
    one = WeylPoly.one(p.n)
    ys = [WeylPoly.y(p.n, ell) for ell in range(1, p.n + 1)]
    which = Nucleus(which)
    if which is Nucleus.LEFT:
        return [associator_star(k, p, one, one)] + [associator_star(k, p, one, y) for y in ys]
    if which is Nucleus.MIDDLE:
        return [associator_star(k, y, p, one) for y in ys]
    return [associator_star(k, one, one, p)] + [associator_star(k, y, one, p) for y in ys]


def nucleus_probe(k: TwistVector, p: WeylPoly, which: Nucleus) -> bool:
    """True iff every witness associator vanishes; for k != 0 only p = 0 passes."""
    return all(defect.is_zero() for defect in nucleus_witness_defects(k, p, which))


def center_probe(k: TwistVector, p: WeylPoly) -> bool:
    """Commuter and all three nuclei: K when k = 0, {0} otherwise."""
    return commuter_probe(k, p) and all(nucleus_probe(k, p, which) for which in Nucleus)
