"""
Property suites for the whole library.

Every suite draws its inputs from a seeded generator, compares two independent
computations (or a computation against a closed form) exactly, and reports how
many cases it ran and which failed. `quick=True` shrinks the sample counts for
the unit tests; the full counts are what `homweyl selftest` runs.
"""
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from .arith import (
    WeylPoly,
    add,
    commutator,
    linear_combination,
    lowest_degree_part,
    mul_assoc,
    oracle_mul,
    scale,
    total_degree,
    word_of,
)
from .deform import (
    ParamMap,
    ParamPoly,
    deform_bracket,
    deform_star,
    order_term,
    series_bracket,
    series_star,
    series_twist,
    specialize,
)
from .errors import ClassificationError
from .homstar import (
    associator_star,
    hom_assoc_defect,
    hom_lie_defects,
    is_weak_identity,
    ore_star,
    star,
    weak_unit_defect,
)
from .morphisms import (
    GeneratorImages,
    apply_morphism,
    build_inverse_iso,
    build_iso,
    check_morphism,
    compose,
    separating_derivation,
)
from .sampling import (
    make_rng,
    monomials_up_to,
    random_poly,
    random_twist,
    random_twist_pair,
)
from .structure import (
    ad,
    derivation_defect_on_generators,
    is_hom_derivation,
    is_shift_invariant_modulo_scalars,
    reduce_to_scalar,
    replay_trace,
)
from .twist import TwistVector, apply_twist, twist_power, twist_sequential, twist_via_exp

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10


@dataclass
class SuiteResult:
    """Outcome of one property suite."""

    name: str
    cases: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.cases > 0

    def check(self, ok: bool, description: Callable[[], str]) -> bool:
        """Count one case; describe it only if it failed."""
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(description())
        return ok


def _count(full: int, quick: bool) -> int:
    return max(5, full // 10) if quick else full


def _oracle_product(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    pairs = []
    for ma, ca in p.items():
        for mb, cb in q.items():
            pairs.append((ca * cb, oracle_mul(word_of(ma), word_of(mb), p.n)))
    return linear_combination(p.n, pairs)


def suite_oracle(result: SuiteResult, seed: int, quick: bool) -> None:
    """mul_assoc against free-word rewriting."""
    max_length = 4 if quick else 6
    for n in (1, 2):
        monos = monomials_up_to(n, max_length)
        for a, b in itertools.product(monos, repeat=2):
            if a.total_degree + b.total_degree > max_length:
                continue
            pa, pb = WeylPoly(n, {a: 1}), WeylPoly(n, {b: 1})
            result.check(
                mul_assoc(pa, pb) == oracle_mul(word_of(a), word_of(b), n),
                lambda: f"n={n}: ({pa}) ({pb})",
            )
    rng = make_rng(seed, "oracle")
    for _ in range(_count(500, quick)):
        p, q = random_poly(rng, 3, 3), random_poly(rng, 3, 3)
        result.check(mul_assoc(p, q) == _oracle_product(p, q), lambda: f"n=3: ({p}) ({q})")


def suite_hom_assoc(result: SuiteResult, seed: int, quick: bool) -> None:
    """alpha(a) * (b * c) = (a * b) * alpha(c) across dimensions and zero patterns."""
    rng = make_rng(seed, "hom-assoc")
    for n in (1, 2, 3):
        for pattern in ("zero", "one", "all"):
            k = random_twist(rng, n, pattern)
            for _ in range(_count(200, quick)):
                a, b, c = (random_poly(rng, n, 4, max_terms=2) for _ in range(3))
                result.check(
                    hom_assoc_defect(k, a, b, c).is_zero(),
                    lambda: f"k=({k}): a={a}, b={b}, c={c}",
                )


def suite_twist_laws(result: SuiteResult, seed: int, quick: bool) -> None:
    """Shift equals exponential; powers; sequential shifts; alpha is multiplicative."""
    rng = make_rng(seed, "twist")
    for _ in range(_count(100, quick)):
        n = rng.randint(1, 3)
        k = random_twist(rng, n, "mixed")
        p, q = random_poly(rng, n, 4), random_poly(rng, n, 3)
        result.check(apply_twist(k, p) == twist_via_exp(k, p), lambda: f"exp form, k=({k}), p={p}")
        for i in range(-3, 4):
            step = k if i >= 0 else -k
            iterated = p
            for _ in range(abs(i)):
                iterated = apply_twist(step, iterated)
            result.check(twist_power(k, i, p) == iterated, lambda: f"power {i}, k=({k}), p={p}")
        order = list(range(1, n + 1))
        rng.shuffle(order)
        result.check(twist_sequential(k, p, order) == apply_twist(k, p), lambda: f"sequential {order}, k=({k}), p={p}")
        result.check(
            apply_twist(k, mul_assoc(p, q)) == mul_assoc(apply_twist(k, p), apply_twist(k, q)),
            lambda: f"multiplicative, k=({k}), p={p}, q={q}",
        )


def suite_power_assoc(result: SuiteResult, seed: int, quick: bool) -> None:
    """The star associator of (y_l x_l)^3 vanishes iff k_l = 0, with lowest term k_l x_l otherwise."""
    rng = make_rng(seed, "power-assoc")
    for n in (1, 2, 3):
        for pattern in ("zero", "one", "all", "mixed", "mixed"):
            k = random_twist(rng, n, pattern)
            for ell in range(1, n + 1):
                a = mul_assoc(WeylPoly.y(n, ell), WeylPoly.x(n, ell))
                defect = associator_star(k, a, a, a)
                k_ell = k.entry(ell)
                if k_ell == 0:
                    result.check(defect.is_zero(), lambda: f"k=({k}), l={ell}: expected zero, got {defect}")
                else:
                    expected = scale(k_ell, WeylPoly.x(n, ell))
                    result.check(
                        lowest_degree_part(defect) == expected,
                        lambda: f"k=({k}), l={ell}: lowest term {lowest_degree_part(defect)}, expected {expected}",
                    )


def suite_simplicity(result: SuiteResult, seed: int, quick: bool) -> None:
    """reduce_to_scalar reaches a nonzero scalar within total_degree steps, and the trace replays."""
    rng = make_rng(seed, "simplicity")
    for n in (1, 2, 3):
        for _ in range(_count(100, quick)):
            k = random_twist(rng, n, "mixed")
            p = random_poly(rng, n, 4, nonzero=True)
            reduction = reduce_to_scalar(k, p)
            result.check(
                reduction.scalar != 0
                and len(reduction.trace) <= total_degree(p)
                and replay_trace(k, p, reduction.trace) == WeylPoly.constant(n, reduction.scalar),
                lambda: f"k=({k}), p={p}: trace {[s.label for s in reduction.trace]}, scalar {reduction.scalar}",
            )


def _is_derivation_by_defects(k: TwistVector, p: WeylPoly) -> bool:
    return all(d.is_zero() for d in derivation_defect_on_generators(k, p))


def suite_derivations(result: SuiteResult, seed: int, quick: bool) -> None:
    """Structural derivation test against generator defects, star-Leibniz, and y_l / y_l^2."""
    rng = make_rng(seed, "derivations")
    for _ in range(_count(200, quick)):
        n = rng.randint(1, 3)
        k = random_twist(rng, n, "mixed")
        p = random_poly(rng, n, 3)
        structural = is_hom_derivation(k, p)
        by_defects = _is_derivation_by_defects(k, p)
        if structural != by_defects and not structural and is_shift_invariant_modulo_scalars(k, p):
            result.notes.append(f"k=({k}), p={p}: shift-invariant element outside the structural family")
            continue
        result.check(structural == by_defects, lambda: f"k=({k}), p={p}: structural={structural}, defects={by_defects}")

    for _ in range(_count(20, quick)):
        n = rng.randint(1, 3)
        k = random_twist(rng, n, "mixed")
        p = _random_structural_derivation(rng, k)
        for _ in range(_count(20, quick)):
            a, b = random_poly(rng, n, 2), random_poly(rng, n, 2)
            lhs = ad(p, star(k, a, b))
            rhs = add(star(k, ad(p, a), b), star(k, a, ad(p, b)))
            result.check(lhs == rhs, lambda: f"Leibniz, k=({k}), p={p}, a={a}, b={b}")

    for n in (1, 2, 3):
        for pattern in ("zero", "one", "all", "mixed"):
            k = random_twist(rng, n, pattern)
            for ell in range(1, n + 1):
                y = WeylPoly.y(n, ell)
                y2 = mul_assoc(y, y)
                result.check(is_hom_derivation(k, y) and _is_derivation_by_defects(k, y), lambda: f"ad_y{ell} rejected, k=({k})")
                expected = k.entry(ell) == 0
                result.check(
                    is_hom_derivation(k, y2) == expected and _is_derivation_by_defects(k, y2) == expected,
                    lambda: f"ad_y{ell}^2 with k=({k}): expected accepted={expected}",
                )


def _random_structural_derivation(rng, k: TwistVector) -> WeylPoly:
    """sum over nonzero k_i of c_i y_i plus a random element in the unshifted y's and all x's."""
    n = k.n
    p = random_poly(rng, n, 3)
    shifted = [i - 1 for i in k.nonzero_set()]
    terms = {mono: c for mono, c in p.items() if not any(mono.yexp[i] for i in shifted)}
    linear = WeylPoly(n, terms)
    for i in shifted:
        linear = add(linear, scale(rng.randint(-3, 3), WeylPoly.y(n, i + 1)))
    return linear


def suite_isomorphisms(result: SuiteResult, seed: int, quick: bool) -> None:
    """build_iso passes both checkers, transports the star product and inverts; unequal counts separate."""
    rng = make_rng(seed, "isomorphisms")
    for _ in range(_count(20, quick)):
        n = rng.randint(1, 3)
        k, k2 = random_twist_pair(rng, n, same_count=True)
        phi = build_iso(k, k2)
        relations, equations = check_morphism(k, k2, phi)
        result.check(relations.accepted and equations.accepted, lambda: f"checkers rejected build_iso(({k}), ({k2}))")
        for _ in range(_count(50, quick)):
            a, b = random_poly(rng, n, 2), random_poly(rng, n, 2)
            result.check(
                apply_morphism(phi, star(k, a, b)) == star(k2, apply_morphism(phi, a), apply_morphism(phi, b)),
                lambda: f"transport, k=({k}), k'=({k2}), a={a}, b={b}",
            )
        inverse = build_inverse_iso(k, k2)
        identity = GeneratorImages.identity(n)
        result.check(
            compose(inverse, phi) == identity and compose(phi, inverse) == identity,
            lambda: f"inverse does not compose to the identity, k=({k}), k'=({k2})",
        )

    for _ in range(_count(10, quick)):
        n = rng.randint(1, 3)
        k, k2 = random_twist_pair(rng, n, same_count=False)
        try:
            build_iso(k, k2)
            raised = False
        except ClassificationError:
            raised = True
        ell, witness = separating_derivation(k, k2)
        result.check(
            raised and is_hom_derivation(k, witness) != is_hom_derivation(k2, witness),
            lambda: f"no separation for k=({k}), k'=({k2}) at y{ell}^2",
        )


def _corruptions(rng, k: TwistVector, k2: TwistVector, phi: GeneratorImages):
    """Systematic edits of a valid isomorphism; some stay morphisms, most do not."""
    n = phi.n
    ell = rng.randrange(n)
    m = rng.randrange(n)
    x_img, y_img = list(phi.x_img), list(phi.y_img)
    one = WeylPoly.one(n)

    def edit(xs=None, ys=None):
        return phi.replace(x_img=xs, y_img=ys)

    def at(images, index, value):
        out = list(images)
        out[index] = value
        return out

    yield "scale-x", edit(xs=at(x_img, ell, scale(2, x_img[ell])))
    yield "shift-x", edit(xs=at(x_img, ell, add(x_img[ell], one)))
    yield "shift-y", edit(ys=at(y_img, ell, add(y_img[ell], scale(Fraction(1, 2), one))))
    yield "negate-y", edit(ys=at(y_img, ell, scale(-1, y_img[ell])))
    yield "drop-x", edit(xs=at(x_img, ell, WeylPoly.zero(n)))
    yield "add-y-to-x", edit(xs=at(x_img, ell, add(x_img[ell], WeylPoly.y(n, m + 1))))
    yield "add-x-to-y", edit(ys=at(y_img, ell, add(y_img[ell], WeylPoly.x(n, m + 1))))
    yield "square-x", edit(xs=at(x_img, ell, add(x_img[ell], mul_assoc(x_img[ell], x_img[ell]))))
    yield "square-y", edit(ys=at(y_img, ell, add(y_img[ell], mul_assoc(WeylPoly.y(n, m + 1), WeylPoly.y(n, m + 1)))))
    if n >= 2:
        j = (ell + 1) % n
        yield "swap-x", edit(xs=at(at(x_img, ell, x_img[j]), j, x_img[ell]))
        yield "mix-x", edit(xs=at(x_img, ell, add(x_img[ell], x_img[j])))


def suite_checker_agreement(result: SuiteResult, seed: int, quick: bool) -> None:
    """Relation checker and equation checker agree on valid isomorphisms and corrupted variants."""
    rng = make_rng(seed, "checkers")
    corrupted = rejected = 0
    target = 12 if quick else 48
    while corrupted < target:
        n = rng.randint(1, 3)
        k, k2 = random_twist_pair(rng, n, same_count=True)
        phi = build_iso(k, k2)
        candidates = [("valid", phi)] + list(_corruptions(rng, k, k2, phi))
        for label, images in candidates:
            relations, equations = check_morphism(k, k2, images)
            result.check(
                relations.accepted == equations.accepted,
                lambda: f"{label}, k=({k}), k'=({k2}): relations={relations.accepted}, equations={equations.accepted}",
            )
            if label == "valid":
                result.check(relations.accepted, lambda: f"valid isomorphism rejected, k=({k}), k'=({k2})")
            else:
                corrupted += 1
                rejected += not relations.accepted
    result.check(rejected > 0, lambda: "no corrupted candidate was rejected")
    result.notes.append(f"{corrupted} corrupted candidates, {rejected} rejected")


def suite_deformation(result: SuiteResult, seed: int, quick: bool) -> None:
    """Specialization, order-0 terms, and series-level hom-associativity, hom-Jacobi and alternativity."""
    rng = make_rng(seed, "deformation")
    for _ in range(_count(100, quick)):
        n = rng.randint(1, 3)
        k = random_twist(rng, n, rng.choice(["one", "all", "mixed"]))
        pm = ParamMap.for_twist(k) if not k.is_zero() else ParamMap(tuple(range(1, n + 1)))
        values = [k.entry(pos) for pos in pm.positions]
        a, b = random_poly(rng, n, 3), random_poly(rng, n, 3)
        series = deform_star(a, b, pm)
        result.check(specialize(series, values) == star(k, a, b), lambda: f"specialize, k=({k}), a={a}, b={b}")
        zero = (0,) * pm.m
        result.check(order_term(series, zero) == mul_assoc(a, b), lambda: f"order-0 product, a={a}, b={b}")
        result.check(
            order_term(deform_bracket(a, b, pm), zero) == commutator(a, b),
            lambda: f"order-0 bracket, a={a}, b={b}",
        )

    for _ in range(_count(100, quick)):
        n = rng.randint(1, 2)
        positions = tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n))))
        pm = ParamMap(positions)
        a, b, c = (ParamPoly.constant(pm.m, random_poly(rng, n, 2, max_terms=2)) for _ in range(3))
        alternating = series_bracket(a, a, pm)
        result.check(alternating.is_zero(), lambda: f"[a, a] = {alternating} for a={a}")
        jacobi = ParamPoly(pm.m, n)
        for u, v, w in ((a, b, c), (c, a, b), (b, c, a)):
            jacobi = jacobi + series_bracket(series_twist(u, pm), series_bracket(v, w, pm), pm)
        result.check(jacobi.is_zero(), lambda: f"hom-Jacobi defect {jacobi} for a={a}, b={b}, c={c}")
        hom_assoc = series_star(series_twist(a, pm), series_star(b, c, pm), pm) - series_star(
            series_star(a, b, pm), series_twist(c, pm), pm
        )
        result.check(hom_assoc.is_zero(), lambda: f"series hom-associativity defect {hom_assoc}")

    for _ in range(_count(20, quick)):
        n = rng.randint(1, 3)
        k = random_twist(rng, n, "mixed")
        a, b, c = (random_poly(rng, n, 2, max_terms=2) for _ in range(3))
        alternating, jacobi = hom_lie_defects(k, a, b, c)
        result.check(alternating.is_zero() and jacobi.is_zero(), lambda: f"hom-Lie, k=({k}), a={a}, b={b}, c={c}")


def suite_weak_unit(result: SuiteResult, seed: int, quick: bool) -> None:
    """a * 1 = 1 * a = alpha(a), and no other monomial of degree <= 2 is a weak identity."""
    rng = make_rng(seed, "weak-unit")
    for _ in range(_count(100, quick)):
        n = rng.randint(1, 3)
        k = random_twist(rng, n, "mixed")
        a = random_poly(rng, n, 4)
        right, left = weak_unit_defect(k, a)
        result.check(right.is_zero() and left.is_zero(), lambda: f"k=({k}), a={a}: {right}, {left}")
    for n in (1, 2):
        k = random_twist(rng, n, "all")
        probes = WeylPoly.generators(n) + [random_poly(rng, n, 2) for _ in range(5)]
        result.check(is_weak_identity(k, WeylPoly.one(n), probes), lambda: f"1 is not a weak identity for k=({k})")
        for mono in monomials_up_to(n, 2):
            if mono.total_degree == 0:
                continue
            e = WeylPoly(n, {mono: 1})
            result.check(not is_weak_identity(k, e, probes), lambda: f"{e} passed as a weak identity for k=({k})")



def suite_ore_product(result: SuiteResult, seed: int, quick: bool) -> None:
    """The iterated differential polynomial product equals the star product."""
    rng = make_rng(seed, "ore-product")
    for n in (1, 2, 3):
        for pattern in ("zero", "one", "all"):
            k = random_twist(rng, n, pattern)
            for _ in range(_count(100, quick)):
                p, q = random_poly(rng, n, 4, max_terms=3), random_poly(rng, n, 4, max_terms=3)
                result.check(ore_star(k, p, q) == star(k, p, q), lambda: f"k=({k}): p={p}, q={q}")

SUITES: Dict[str, Callable[[SuiteResult, int, bool], None]] = {
    "oracle": suite_oracle,
    "hom-assoc": suite_hom_assoc,
    "twist-laws": suite_twist_laws,
    "power-assoc": suite_power_assoc,
    "simplicity": suite_simplicity,
    "derivations": suite_derivations,
    "isomorphisms": suite_isomorphisms,
    "checker-agreement": suite_checker_agreement,
    "deformation": suite_deformation,
    "weak-unit": suite_weak_unit,
    "ore-product": suite_ore_product,
}


def run_suite(name: str, seed: int = 0, quick: bool = False) -> SuiteResult:
    """
    Run one named suite.

    Args:
        name: Key of SUITES
        seed: Seed for the suite's generator
        quick: Use reduced sample counts

    Returns:
        SuiteResult with timing filled in
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    result = SuiteResult(name)
    start = time.perf_counter()
    SUITES[name](result, seed, quick)
    result.elapsed = time.perf_counter() - start
    logger.info(f"suite {name}: {result.cases} cases, {result.failed} failed, {result.elapsed:.2f}s")
    return result


def run_selftest(
    seed: int = 0,
    workers: int = 1,
    names: Optional[Sequence[str]] = None,
    quick: bool = False,
) -> List[SuiteResult]:
    """Run the selected suites (all by default), in a process pool when workers > 1."""
    names = list(names or SUITES)
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    if workers > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_suite, names, [seed] * len(names), [quick] * len(names)))
    return [run_suite(name, seed, quick) for name in names]
