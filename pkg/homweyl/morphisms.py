"""
Morphisms between twisted Weyl algebras A_n^k -> A_n^{k'}.

A morphism is given by the images of the 2n generators. Two independent
checkers decide whether such images define a hom-associative morphism:

* `check_relations_and_intertwine` verifies the Weyl relations on the images and
  phi(alpha_k(g)) = alpha_{k'}(phi(g)) on every generator;
* `check_hom_constraints` decomposes the images as
  phi(x_l) = p_l + sum_i f_il y_i, phi(y_l) = q_l + sum_i g_il y_i with p_l, q_l free
  of the y_i where k'_i != 0, and verifies the coefficient equations and the
  three families of PDEs the decomposition has to satisfy.

The first checker is authoritative; the two must agree on every candidate
whose images decompose.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import NormalMonomial, WeylPoly, add, commutator, linear_combination, mul_assoc, partial_x, power, scale
from .errors import ClassificationError, DimensionError
from .structure import is_hom_derivation
from .twist import TwistVector, apply_twist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorImages:
    """Candidate images phi(x_l), phi(y_l), l = 1..n."""

    n: int
    x_img: Tuple[WeylPoly, ...]
    y_img: Tuple[WeylPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "x_img", tuple(self.x_img))
        object.__setattr__(self, "y_img", tuple(self.y_img))
        if len(self.x_img) != self.n or len(self.y_img) != self.n:
            raise DimensionError(f"expected {self.n} x-images and {self.n} y-images")
        for img in self.x_img + self.y_img:
            if img.n != self.n:
                raise DimensionError(f"image {img} does not live in A_{self.n}")

    @classmethod
    def identity(cls, n: int) -> "GeneratorImages":
        return cls(
            n,
            tuple(WeylPoly.x(n, ell) for ell in range(1, n + 1)),
            tuple(WeylPoly.y(n, ell) for ell in range(1, n + 1)),
        )

    def replace(self, x_img: Optional[Sequence[WeylPoly]] = None, y_img: Optional[Sequence[WeylPoly]] = None) -> "GeneratorImages":
        return GeneratorImages(
            self.n,
            tuple(x_img) if x_img is not None else self.x_img,
            tuple(y_img) if y_img is not None else self.y_img,
        )


def _check_pair(k: TwistVector, k2: TwistVector) -> int:
    if k.n != k2.n:
        raise DimensionError(f"twist vectors of lengths {k.n} and {k2.n}")
    return k.n


def _index_bijections(k: TwistVector, k2: TwistVector) -> Tuple[Dict[int, int], Dict[int, int]]:
    """Order-preserving bijections between the zero sets and between the nonzero sets."""
    n = _check_pair(k, k2)
    zero, zero2 = sorted(k.zero_set()), sorted(k2.zero_set())
    if len(zero) != len(zero2):
        raise ClassificationError(
            f"k has {n - len(zero)} nonzero entries and k' has {n - len(zero2)}; "
            "the algebras are not isomorphic"
        )
    nonzero, nonzero2 = sorted(k.nonzero_set()), sorted(k2.nonzero_set())
    return dict(zip(zero, zero2)), dict(zip(nonzero, nonzero2))


def build_iso(k: TwistVector, k2: TwistVector) -> GeneratorImages:
    """
    Classifying isomorphism A_n^k -> A_n^{k'}.

    Args:
        k: Source twist vector
        k2: Target twist vector with the same number of nonzero entries

    Returns:
        GeneratorImages with phi(x_l) = x_b(l), phi(y_l) = y_b(l) on the zero set and
        phi(x_l) = (k'_b'(l)/k_l) x_b'(l), phi(y_l) = (k_l/k'_b'(l)) y_b'(l) elsewhere

    Raises:
        ClassificationError: if the nonzero counts differ
    """
    beta, beta_prime = _index_bijections(k, k2)
    n = k.n
    x_img: List[WeylPoly] = []
    y_img: List[WeylPoly] = []
    for ell in range(1, n + 1):
        if ell in beta:
            x_img.append(WeylPoly.x(n, beta[ell]))
            y_img.append(WeylPoly.y(n, beta[ell]))
        else:
            target = beta_prime[ell]
            ratio = k2.entry(target) / k.entry(ell)
            x_img.append(scale(ratio, WeylPoly.x(n, target)))
            y_img.append(scale(1 / ratio, WeylPoly.y(n, target)))
    logger.info(f"built isomorphism for k=({k}) -> k'=({k2})")
    return GeneratorImages(n, tuple(x_img), tuple(y_img))


def build_inverse_iso(k: TwistVector, k2: TwistVector) -> GeneratorImages:
    """Inverse A_n^{k'} -> A_n^k of `build_iso(k, k2)`."""
    beta, beta_prime = _index_bijections(k, k2)
    n = k.n
    x_img: List[Optional[WeylPoly]] = [None] * n
    y_img: List[Optional[WeylPoly]] = [None] * n
    for ell, m in beta.items():
        x_img[m - 1] = WeylPoly.x(n, ell)
        y_img[m - 1] = WeylPoly.y(n, ell)
    for ell, m in beta_prime.items():
        ratio = k.entry(ell) / k2.entry(m)
        x_img[m - 1] = scale(ratio, WeylPoly.x(n, ell))
        y_img[m - 1] = scale(1 / ratio, WeylPoly.y(n, ell))
    return GeneratorImages(n, tuple(x_img), tuple(y_img))


def apply_morphism(images: GeneratorImages, p: WeylPoly) -> WeylPoly:
    """
    Multiplicative extension of generator images.

    Each basis monomial y^a x^b is sent to phi(y_1)^{a_1}...phi(y_n)^{a_n}
    phi(x_1)^{b_1}...phi(x_n)^{b_n}, and the result is extended linearly.
    """
    if images.n != p.n:
        raise DimensionError(f"morphism on A_{images.n} applied to an element of A_{p.n}")
    powers: Dict[Tuple[str, int, int], WeylPoly] = {}

    def image_power(kind: str, ell: int, e: int) -> WeylPoly:
        key = (kind, ell, e)
        if key not in powers:
            base = images.y_img[ell] if kind == "y" else images.x_img[ell]
            powers[key] = power(base, e)
        return powers[key]

    pairs = []
    for mono, coeff in p.items():
        value = WeylPoly.one(p.n)
        for ell, e in enumerate(mono.yexp):
            if e:
                value = mul_assoc(value, image_power("y", ell, e))
        for ell, e in enumerate(mono.xexp):
            if e:
                value = mul_assoc(value, image_power("x", ell, e))
        pairs.append((coeff, value))
    return linear_combination(p.n, pairs)


def compose(outer: GeneratorImages, inner: GeneratorImages) -> GeneratorImages:
    """Images of outer o inner."""
    return GeneratorImages(
        inner.n,
        tuple(apply_morphism(outer, img) for img in inner.x_img),
        tuple(apply_morphism(outer, img) for img in inner.y_img),
    )


@dataclass(frozen=True)
class CheckEntry:
    """One equation of a morphism check together with its defect polynomial."""

    equation: str
    indices: Tuple[int, ...]
    defect: WeylPoly

    @property
    def passed(self) -> bool:
        return self.defect.is_zero()


@dataclass
class MorphismReport:
    entries: List[CheckEntry] = field(default_factory=list)

    def failures(self) -> List[CheckEntry]:
        return [entry for entry in self.entries if not entry.passed]

    @property
    def accepted(self) -> bool:
        return not self.failures()

    def __len__(self) -> int:
        return len(self.entries)


def check_relations_and_intertwine(k: TwistVector, k2: TwistVector, images: GeneratorImages) -> MorphismReport:
    """
    Relation and intertwining check; only nonzero defects are recorded.

    Equations: [phi x_j, phi x_l] and [phi y_j, phi y_l] for j < l, [phi x_j, phi y_l] - delta_jl
    for all j, l, and phi(alpha_k(g)) - alpha_{k'}(phi(g)) for every generator g.

    Returns:
        MorphismReport; empty iff the images define a morphism A_n^k -> A_n^{k'}
    """
    n = _check_pair(k, k2)
    if images.n != n:
        raise DimensionError(f"images on A_{images.n} checked against twist vectors of length {n}")
    report = MorphismReport()

    def record(equation: str, indices: Tuple[int, ...], defect: WeylPoly) -> None:
        if not defect.is_zero():
            report.entries.append(CheckEntry(equation, indices, defect))

    for j in range(n):
        for ell in range(j + 1, n):
            record("xx", (j + 1, ell + 1), commutator(images.x_img[j], images.x_img[ell]))
            record("yy", (j + 1, ell + 1), commutator(images.y_img[j], images.y_img[ell]))
    for j in range(n):
        for ell in range(n):
            delta = 1 if j == ell else 0
            record("xy", (j + 1, ell + 1), add(commutator(images.x_img[j], images.y_img[ell]), WeylPoly.constant(n, -delta)))
    for ell in range(1, n + 1):
        for kind, g, img in (("x", WeylPoly.x(n, ell), images.x_img[ell - 1]), ("y", WeylPoly.y(n, ell), images.y_img[ell - 1])):
            defect = add(apply_morphism(images, apply_twist(k, g)), scale(-1, apply_twist(k2, img)))
            record(f"intertwine-{kind}", (ell,), defect)
    if report.entries:
        logger.info(f"relation check rejected candidate with {len(report.entries)} defects")
    return report


@dataclass(frozen=True)
class HomDecomposition:
    """phi(x_l) = p[l] + sum_i f[i][l] y_i and phi(y_l) = q[l] + sum_i g[i][l] y_i (0-based lists)."""

    p: Tuple[WeylPoly, ...]
    q: Tuple[WeylPoly, ...]
    f: Tuple[Tuple[Fraction, ...], ...]
    g: Tuple[Tuple[Fraction, ...], ...]


def _split_image(img: WeylPoly, k2: TwistVector) -> Optional[Tuple[WeylPoly, List[Fraction]]]:
    n = img.n
    linear = [Fraction(0)] * n
    rest: Dict[NormalMonomial, Fraction] = {}
    forbidden = [i - 1 for i in sorted(k2.nonzero_set())]
    for mono, coeff in img.items():
        touched = [i for i in forbidden if mono.yexp[i]]
        if not touched:
            rest[mono] = coeff
            continue
        i = touched[0]
        if len(touched) > 1 or mono.yexp[i] != 1 or sum(mono.yexp) != 1 or any(mono.xexp):
            return None
        linear[i] = coeff
    return WeylPoly(n, rest), linear


def decompose_images(k2: TwistVector, images: GeneratorImages) -> Optional[HomDecomposition]:
    """Split images into p_l, q_l, f_il, g_il; None if some forbidden y_i enters nonlinearly."""
    n = images.n
    p, q = [], []
    f_cols, g_cols = [], []
    for ell in range(n):
        split_x = _split_image(images.x_img[ell], k2)
        split_y = _split_image(images.y_img[ell], k2)
        if split_x is None or split_y is None:
            return None
        p.append(split_x[0])
        f_cols.append(split_x[1])
        q.append(split_y[0])
        g_cols.append(split_y[1])
    f = tuple(tuple(f_cols[ell][i] for ell in range(n)) for i in range(n))
    g = tuple(tuple(g_cols[ell][i] for ell in range(n)) for i in range(n))
    return HomDecomposition(tuple(p), tuple(q), f, g)


def check_hom_constraints(k: TwistVector, k2: TwistVector, images: GeneratorImages) -> MorphismReport:
    """
    Equation-set check on the decomposed images; every equation is recorded.

    coeff1: sum_i f_il k'_i = 0
    coeff2: sum_i g_il k'_i = k_l
    PDE1:   sum_i d/dx_i (f_il p_j - f_ij p_l) = [p_l, p_j]
    PDE2:   sum_i d/dx_i (g_il q_j - g_ij q_l) = [q_l, q_j]
    PDE3:   sum_i d/dx_i (g_il p_j - f_ij q_l) = [q_l, p_j] + delta_jl

    Images that do not decompose produce a single failed "decomposition" entry.
    """
    n = _check_pair(k, k2)
    if images.n != n:
        raise DimensionError(f"images on A_{images.n} checked against twist vectors of length {n}")
    report = MorphismReport()
    parts = decompose_images(k2, images)
    if parts is None:
        logger.info("equation check: images are not linear in the shifted y-variables")
        report.entries.append(CheckEntry("decomposition", (), WeylPoly.one(n)))
        return report
    p, q, f, g = parts.p, parts.q, parts.f, parts.g

    def dx_sum(coeffs_a, poly_a: Sequence[WeylPoly], a_col: int, coeffs_b, poly_b: Sequence[WeylPoly], b_col: int, j: int, ell: int) -> WeylPoly:
        # sum_i d/dx_i (a_{i,a_col} * poly_a[j] - b_{i,b_col} * poly_b[ell])
        pairs = []
        for i in range(n):
            pairs.append((coeffs_a[i][a_col], partial_x(poly_a[j], i + 1)))
            pairs.append((-coeffs_b[i][b_col], partial_x(poly_b[ell], i + 1)))
        return linear_combination(n, pairs)

    for ell in range(n):
        coeff1 = sum((f[i][ell] * k2.k[i] for i in range(n)), Fraction(0))
        coeff2 = sum((g[i][ell] * k2.k[i] for i in range(n)), Fraction(0)) - k.k[ell]
        report.entries.append(CheckEntry("coeff1", (ell + 1,), WeylPoly.constant(n, coeff1)))
        report.entries.append(CheckEntry("coeff2", (ell + 1,), WeylPoly.constant(n, coeff2)))
    for ell in range(n):
        for j in range(n):
            delta = 1 if j == ell else 0
            pde1 = add(dx_sum(f, p, ell, f, p, j, j, ell), scale(-1, commutator(p[ell], p[j])))
            pde2 = add(dx_sum(g, q, ell, g, q, j, j, ell), scale(-1, commutator(q[ell], q[j])))
            pde3 = add(dx_sum(g, p, ell, f, q, j, j, ell), scale(-1, commutator(q[ell], p[j])))
            pde3 = add(pde3, WeylPoly.constant(n, -delta))
            report.entries.append(CheckEntry("PDE1", (j + 1, ell + 1), pde1))
            report.entries.append(CheckEntry("PDE2", (j + 1, ell + 1), pde2))
            report.entries.append(CheckEntry("PDE3", (j + 1, ell + 1), pde3))
    return report


def check_morphism(k: TwistVector, k2: TwistVector, images: GeneratorImages) -> Tuple[MorphismReport, MorphismReport]:
    """
    Run both checkers and surface any disagreement.

    Returns:
        (relation report, equation report)
    """
    relations = check_relations_and_intertwine(k, k2, images)
    equations = check_hom_constraints(k, k2, images)
    if relations.accepted != equations.accepted:
        logger.warning(
            f"morphism checkers disagree for k=({k}), k'=({k2}): "
            f"relations accepted={relations.accepted}, equations accepted={equations.accepted}"
        )
    return relations, equations


def separating_derivation(k: TwistVector, k2: TwistVector) -> Tuple[int, WeylPoly]:
    """
    Witness that Der(A_n^k) and Der(A_n^{k'}) differ when the zero sets differ.

    Returns:
        (ell, y_ell^2) such that ad_{y_ell^2} is a derivation of exactly one of the two algebras
    """
    n = _check_pair(k, k2)
    for ell in range(1, n + 1):
        candidate = power(WeylPoly.y(n, ell), 2)
        if is_hom_derivation(k, candidate) != is_hom_derivation(k2, candidate):
            return ell, candidate
    raise ValueError("k and k' have the same zero set; no separating y_l^2 exists")
