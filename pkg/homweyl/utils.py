import logging
from typing import Iterable, List, Sequence, Tuple

from .arith import WeylPoly, format_poly
from .errors import ExprSyntaxError
from .models import DefectRecord, ReductionStepRecord, SuiteRecord
from .morphisms import CheckEntry
from .selftest import SuiteResult
from .structure import ReductionStep

logger = logging.getLogger(__name__)


def validate_positions(positions_str: str) -> Tuple[int, ...]:
    """
    Parse a comma-separated list of y-indices such as "1,3".

    Args:
        positions_str: Comma-separated positive integers

    Returns:
        Tuple of indices in the given order
    """
    parts = [part.strip() for part in positions_str.split(",")]
    parts = [part for part in parts if part]
    if not parts:
        raise ExprSyntaxError("empty parameter position list", 0)
    positions = []
    offset = 0
    for part in parts:
        if not part.isdigit():
            raise ExprSyntaxError(f"parameter position {part!r} is not an index", positions_str.find(part, offset))
        where = positions_str.find(part, offset)
        offset = where + len(part)
        if int(part) in positions:
            raise ExprSyntaxError(f"parameter position {part} repeated; positions must be distinct", where)
        positions.append(int(part))
    return tuple(positions)


def defect_records(entries: Iterable[CheckEntry], prefix: str = "") -> List[DefectRecord]:
    """Turn morphism-check entries into JSON records."""
    return [
        DefectRecord(
            equation=f"{prefix}{entry.equation}",
            indices=list(entry.indices),
            defect=format_poly(entry.defect),
            passed=entry.passed,
        )
        for entry in entries
    ]


def labelled_defects(labels: Sequence[str], defects: Sequence[WeylPoly]) -> List[DefectRecord]:
    return [
        DefectRecord(equation=label, defect=format_poly(defect), passed=defect.is_zero())
        for label, defect in zip(labels, defects)
    ]


def trace_records(steps: Sequence[ReductionStep], values: Sequence[WeylPoly]) -> List[ReductionStepRecord]:
    return [
        ReductionStepRecord(
            step=i,
            operation=step.label,
            generator=step.generator,
            index=step.index,
            value=format_poly(value),
        )
        for i, (step, value) in enumerate(zip(steps, values), start=1)
    ]


def suite_record(result: SuiteResult) -> SuiteRecord:
    return SuiteRecord(
        name=result.name,
        cases=result.cases,
        failed=result.failed,
        failures=list(result.failures),
        notes=list(result.notes),
        elapsed=round(result.elapsed, 3),
        passed=result.passed,
    )


def log_command(command: str, n: int, passed: bool, elapsed: float):
    """
    Log a finished command for monitoring.

    Args:
        command: Command name
        n: Dimension it ran in
        passed: Whether every check passed
        elapsed: Wall-clock seconds
    """
    logger.info(f"Command {command} (n={n}) finished in {elapsed:.3f}s, passed={passed}")
