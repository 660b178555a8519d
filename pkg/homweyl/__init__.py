"""Higher-order hom-associative Weyl algebras A_n^k over the rationals."""

__version__ = "1.0.0"

from .arith import WeylPoly, NormalMonomial, mul_assoc, commutator
from .twist import TwistVector, apply_twist, twist_via_exp, twist_power
from .homstar import star, ore_star, hom_assoc_defect, commutator_star, associator_star
from .structure import reduce_to_scalar, is_hom_derivation, nucleus_probe, commuter_probe
from .morphisms import GeneratorImages, build_iso, build_inverse_iso, apply_morphism, check_morphism
from .deform import ParamMap, ParamPoly, deform_star, deform_twist, deform_bracket, specialize, order_term
from .parser import parse, evaluate, parse_poly

__all__ = [
    "__version__",
    "WeylPoly",
    "NormalMonomial",
    "mul_assoc",
    "commutator",
    "TwistVector",
    "apply_twist",
    "twist_via_exp",
    "twist_power",
    "star",
    "ore_star",
    "hom_assoc_defect",
    "commutator_star",
    "associator_star",
    "reduce_to_scalar",
    "is_hom_derivation",
    "nucleus_probe",
    "commuter_probe",
    "GeneratorImages",
    "build_iso",
    "build_inverse_iso",
    "apply_morphism",
    "check_morphism",
    "ParamMap",
    "ParamPoly",
    "deform_star",
    "deform_twist",
    "deform_bracket",
    "specialize",
    "order_term",
    "parse",
    "evaluate",
    "parse_poly",
]
