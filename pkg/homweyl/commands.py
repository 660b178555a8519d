"""
The command table shared by the CLI and the HTTP service.

Each handler receives a resolved `CommandContext` and returns a
`CommandOutput`; `run_command` times it and wraps it into a `CommandRecord`.
Handlers raise `WeylError` subclasses for bad input and report failed checks
through `passed=False`.
"""
import logging
import time
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Dict, List, Optional, Union

from .arith import WeylPoly, format_poly, mul_assoc
from .config import get_settings
from .deform import ParamMap, deform_bracket, deform_star, deform_twist, format_series, truncate
from .errors import ArityError, ExprSyntaxError
from .homstar import associator_star, commutator_star, hom_assoc_defect, star
from .models import CommandRecord, CommandRequest, DefectRecord, ReductionStepRecord, SuiteRecord
from .morphisms import GeneratorImages, build_iso, check_morphism
from .parser import parse_poly
from .sampling import make_rng, random_poly
from .selftest import SUITES, run_selftest
from .structure import derivation_defect_on_generators, is_hom_derivation, is_shift_invariant_modulo_scalars, reduce_to_scalar
from .twist import TwistVector, twist_power
from .utils import defect_records, labelled_defects, log_command, suite_record, trace_records, validate_positions

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    name: str
    request: CommandRequest
    n: int
    k: TwistVector
    k2: Optional[TwistVector]
    elements: List[WeylPoly]
    seed: int
    degree_cap: int


@dataclass
class CommandOutput:
    result: Union[str, List[str], Dict[str, str], None]
    lines: List[str]
    passed: bool = True
    defects: List[DefectRecord] = field(default_factory=list)
    trace: List[ReductionStepRecord] = field(default_factory=list)
    suites: List[SuiteRecord] = field(default_factory=list)


@dataclass
class CommandRun:
    record: CommandRecord
    lines: List[str]


def _parse_twist(text: Optional[str], n: int, option: str) -> Optional[TwistVector]:
    if text is None:
        return None
    try:
        return TwistVector.parse(text, n)
    except (ValueError, ZeroDivisionError) as e:
        raise ExprSyntaxError(f"{option} {text!r}: {e}", 0) from e


def resolve(name: str, request: CommandRequest) -> CommandContext:
    """Parse twist vectors and expressions; fill seed and degree cap from settings."""
    settings = get_settings()
    n = request.n
    k = _parse_twist(request.k, n, "--k") or TwistVector.zeros(n)
    k2 = _parse_twist(request.k2, n, "--k2")
    return CommandContext(
        name=name,
        request=request,
        n=n,
        k=k,
        k2=k2,
        elements=[parse_poly(text, k) for text in request.expressions],
        seed=request.seed if request.seed is not None else settings.seed,
        degree_cap=request.degree_cap if request.degree_cap is not None else settings.degree_cap,
    )


def _require(ctx: CommandContext, at_least: int, at_most: Optional[int] = None) -> List[WeylPoly]:
    count = len(ctx.elements)
    upper = at_least if at_most is None else at_most
    if count < at_least or count > upper:
        wanted = str(at_least) if upper == at_least else f"{at_least} to {upper}"
        raise ArityError(f"{ctx.name} takes {wanted} expressions, got {count}")
    return ctx.elements


def _single(text: str) -> CommandOutput:
    return CommandOutput(result=text, lines=[text])


def cmd_mul(ctx: CommandContext) -> CommandOutput:
    elements = _require(ctx, 1, 64)
    return _single(format_poly(reduce(mul_assoc, elements)))


def cmd_star(ctx: CommandContext) -> CommandOutput:
    elements = _require(ctx, 1, 64)
    return _single(format_poly(reduce(lambda p, q: star(ctx.k, p, q), elements)))


def cmd_twist(ctx: CommandContext) -> CommandOutput:
    (p,) = _require(ctx, 1)
    return _single(format_poly(twist_power(ctx.k, ctx.request.options.power, p)))


def cmd_commutator(ctx: CommandContext) -> CommandOutput:
    p, q = _require(ctx, 2)
    return _single(format_poly(commutator_star(ctx.k, p, q)))


def cmd_associator(ctx: CommandContext) -> CommandOutput:
    a, b, c = _require(ctx, 3)
    return _single(format_poly(associator_star(ctx.k, a, b, c)))


def cmd_homassoc_check(ctx: CommandContext) -> CommandOutput:
    """Defect of one given triple, or of `count` random triples when no expressions are given."""
    if ctx.elements:
        triples = [tuple(_require(ctx, 3))]
    else:
        rng = make_rng(ctx.seed, "homassoc-check")
        triples = [
            tuple(random_poly(rng, ctx.n, ctx.degree_cap) for _ in range(3))
            for _ in range(ctx.request.options.count)
        ]
    defects = []
    failed = 0
    for a, b, c in triples:
        defect = hom_assoc_defect(ctx.k, a, b, c)
        if not defect.is_zero() or len(triples) == 1:
            defects.append(DefectRecord(equation=f"hom-assoc({a}; {b}; {c})", defect=format_poly(defect), passed=defect.is_zero()))
        failed += not defect.is_zero()
    summary = f"{len(triples) - failed}/{len(triples)} triples hom-associative"
    return CommandOutput(result=summary, lines=[summary] + [f"FAIL {d.equation}: {d.defect}" for d in defects if not d.passed], passed=failed == 0, defects=defects)


def cmd_reduce(ctx: CommandContext) -> CommandOutput:
    (p,) = _require(ctx, 1)
    reduction = reduce_to_scalar(ctx.k, p)
    values = []
    current = p
    for step in reduction.trace:
        current = step.apply(ctx.k, current)
        values.append(current)
    records = trace_records(reduction.trace, values)
    lines = [f"{r.step}. {r.operation} -> {r.value}" for r in records]
    lines.append(f"scalar: {reduction.scalar}")
    return CommandOutput(result=str(reduction.scalar), lines=lines, trace=records)


def cmd_derivation_check(ctx: CommandContext) -> CommandOutput:
    """Is ad_p a derivation of A_n^k? Structural verdict plus the generator defects."""
    (p,) = _require(ctx, 1)
    structural = is_hom_derivation(ctx.k, p)
    defects = derivation_defect_on_generators(ctx.k, p)
    labels = ["ad(1)"] + [f"intertwine-{kind}{ell}" for kind in "xy" for ell in range(1, ctx.n + 1)]
    records = labelled_defects(labels, defects)
    by_defects = all(record.passed for record in records)
    lines = [
        f"structural: {'derivation' if structural else 'not a derivation'}",
        f"generator defects: {'all zero' if by_defects else 'nonzero'}",
    ]
    if structural != by_defects and is_shift_invariant_modulo_scalars(ctx.k, p):
        lines.append("note: alpha_k(p) - p is a scalar, so ad_p commutes with alpha_k")
    lines += [f"  {r.equation}: {r.defect}" for r in records if not r.passed]
    if structural and by_defects:
        verdict = "derivation"
    elif by_defects:
        verdict = "shift-invariant, outside the structural family"
    else:
        verdict = "not a derivation"
    return CommandOutput(result=verdict, lines=lines, passed=structural and by_defects, defects=records)


def _image_lines(images: GeneratorImages) -> Dict[str, str]:
    result = {}
    for ell in range(1, images.n + 1):
        result[f"φ(x{ell})"] = format_poly(images.x_img[ell - 1])
    for ell in range(1, images.n + 1):
        result[f"φ(y{ell})"] = format_poly(images.y_img[ell - 1])
    return result


def _require_k2(ctx: CommandContext) -> TwistVector:
    if ctx.k2 is None:
        raise ArityError(f"{ctx.name} needs --k2")
    return ctx.k2


def cmd_iso(ctx: CommandContext) -> CommandOutput:
    k2 = _require_k2(ctx)
    images = build_iso(ctx.k, k2)
    relations, equations = check_morphism(ctx.k, k2, images)
    result = _image_lines(images)
    passed = relations.accepted and equations.accepted
    lines = [f"{key} = {value}" for key, value in result.items()]
    defects = defect_records(relations.failures(), "relations/") + defect_records(equations.failures(), "equations/")
    return CommandOutput(result=result, lines=lines, passed=passed, defects=defects)


def cmd_morphism_check(ctx: CommandContext) -> CommandOutput:
    """The first n expressions are phi(x_1..x_n), the next n are phi(y_1..y_n)."""
    k2 = ctx.k2 if ctx.k2 is not None else ctx.k
    elements = _require(ctx, 2 * ctx.n)
    images = GeneratorImages(ctx.n, tuple(elements[: ctx.n]), tuple(elements[ctx.n:]))
    relations, equations = check_morphism(ctx.k, k2, images)
    defects = defect_records(relations.entries, "relations/") + defect_records(equations.entries, "equations/")
    lines = [
        f"relations and intertwining: {'accepted' if relations.accepted else 'rejected'}",
        f"equation set: {'accepted' if equations.accepted else 'rejected'}",
    ]
    if relations.accepted != equations.accepted:
        lines.append("checkers disagree")
    lines += [f"  {d.equation} {tuple(d.indices)}: {d.defect}" for d in defects if not d.passed]
    passed = relations.accepted and equations.accepted
    return CommandOutput(result="morphism" if passed else "not a morphism", lines=lines, passed=passed, defects=defects)


def cmd_deform(ctx: CommandContext) -> CommandOutput:
    options = ctx.request.options
    if options.positions:
        pm = ParamMap(validate_positions(options.positions))
    elif not ctx.k.is_zero():
        pm = ParamMap.for_twist(ctx.k)
    else:
        pm = ParamMap(tuple(range(1, ctx.n + 1)))
    pm.validate(ctx.n)
    if options.mode == "twist":
        (a,) = _require(ctx, 1)
        series = deform_twist(a, pm)
    else:
        a, b = _require(ctx, 2)
        series = (deform_star if options.mode == "star" else deform_bracket)(a, b, pm)
    if options.order is not None:
        series = truncate(series, options.order)
    text = format_series(series)
    legend = ", ".join(f"t{s} -> y{pos}" for s, pos in enumerate(pm.positions, start=1))
    return CommandOutput(result=text, lines=[text, f"parameters: {legend}"])


def cmd_selftest(ctx: CommandContext) -> CommandOutput:
    options = ctx.request.options
    unknown = [name for name in options.suites if name not in SUITES]
    if unknown:
        raise ArityError(f"unknown suites {', '.join(unknown)}; available: {', '.join(SUITES)}")
    workers = options.workers or get_settings().workers
    results = run_selftest(seed=ctx.seed, workers=workers, names=options.suites or None, quick=options.quick)
    records = [suite_record(r) for r in results]
    lines = []
    for r in records:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.cases - r.failed}/{r.cases} in {r.elapsed:.2f}s")
        lines += [f"    {failure}" for failure in r.failures]
    passed = all(r.passed for r in records)
    summary = f"{sum(r.passed for r in records)}/{len(records)} suites passed"
    return CommandOutput(result=summary, lines=lines + [summary], passed=passed, suites=records)


COMMANDS: Dict[str, Callable[[CommandContext], CommandOutput]] = {
    "mul": cmd_mul,
    "star": cmd_star,
    "twist": cmd_twist,
    "commutator": cmd_commutator,
    "associator": cmd_associator,
    "homassoc-check": cmd_homassoc_check,
    "reduce": cmd_reduce,
    "derivation-check": cmd_derivation_check,
    "iso": cmd_iso,
    "morphism-check": cmd_morphism_check,
    "deform": cmd_deform,
    "selftest": cmd_selftest,
}


def run_command(name: str, request: CommandRequest) -> CommandRun:
    """
    Run one command end to end.

    Args:
        name: Key of COMMANDS
        request: Validated request

    Returns:
        CommandRun with the JSON record and the human-readable lines

    Raises:
        KeyError: unknown command
        WeylError: bad input (syntax, dimension, arity, classification)
    """
    if name not in COMMANDS:
        raise KeyError(name)
    start = time.perf_counter()
    ctx = resolve(name, request)
    output = COMMANDS[name](ctx)
    elapsed = time.perf_counter() - start
    inputs = request.model_dump()
    inputs.update(k=str(ctx.k), k2=str(ctx.k2) if ctx.k2 is not None else None, seed=ctx.seed, degree_cap=ctx.degree_cap)
    record = CommandRecord(
        command=name,
        inputs=inputs,
        result=output.result,
        defects=output.defects,
        trace=output.trace,
        suites=output.suites,
        passed=output.passed,
        elapsed=round(elapsed, 6),
    )
    log_command(name, ctx.n, output.passed, elapsed)
    return CommandRun(record, output.lines)

