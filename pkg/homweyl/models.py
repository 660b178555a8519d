import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "command_record.schema.json"


class CommandOptions(BaseModel):
    """Options that only some commands read"""
    power: int = Field(default=1, description="Exponent i of alpha_k^i for `twist`")
    count: int = Field(default=50, description="Random triples for `homassoc-check` without expressions", ge=1)
    positions: Optional[str] = Field(None, description="Comma-separated y-indices deformed by t_1..t_m for `deform`")
    order: Optional[int] = Field(None, description="Truncate `deform` output above this total order", ge=0)
    mode: Literal["star", "bracket", "twist"] = Field(default="star", description="Which series `deform` expands")
    suites: List[str] = Field(default_factory=list, description="Suites run by `selftest`; all when empty")
    quick: bool = Field(default=False, description="Reduced sample counts for `selftest`")
    workers: Optional[int] = Field(None, description="Process pool size for `selftest`", ge=1)


class CommandRequest(BaseModel):
    """Input of one command, from the CLI or the HTTP service"""
    n: int = Field(..., description="Dimension of the Weyl algebra", ge=1)
    k: Optional[str] = Field(None, description="Twist vector as comma-separated rationals; zero when omitted")
    k2: Optional[str] = Field(None, description="Target twist vector for iso and morphism-check")
    expressions: List[str] = Field(default_factory=list, description="Positional algebra expressions")
    seed: Optional[int] = Field(None, description="Seed for randomized checks")
    degree_cap: Optional[int] = Field(None, description="Largest total degree of random elements", ge=0)
    options: CommandOptions = Field(default_factory=CommandOptions)


class DefectRecord(BaseModel):
    """One checked equation and its defect polynomial"""
    equation: str = Field(..., description="Equation label, e.g. 'relations/xy' or 'equations/PDE3'")
    indices: List[int] = Field(default_factory=list, description="Generator indices the equation is about")
    defect: str = Field(..., description="Canonical text of the defect; '0' when the equation holds")
    passed: bool


class ReductionStepRecord(BaseModel):
    """One step of the simplicity reduction"""
    step: int = Field(..., ge=1)
    operation: str = Field(..., description="'[x_i, .]*' or '[., y_j]*'")
    generator: Literal["x", "y"]
    index: int = Field(..., ge=1)
    value: str = Field(..., description="Element after this step")


class SuiteRecord(BaseModel):
    """Outcome of one selftest suite"""
    name: str
    cases: int
    failed: int
    failures: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    elapsed: float
    passed: bool


class CommandRecord(BaseModel):
    """Machine-readable result of one command (the --json output)"""
    command: str = Field(..., description="Command name")
    inputs: Dict[str, Any] = Field(..., description="The request as the command resolved it")
    result: Union[str, List[str], Dict[str, str], None] = Field(None, description="Main result in canonical text")
    defects: List[DefectRecord] = Field(default_factory=list)
    trace: List[ReductionStepRecord] = Field(default_factory=list)
    suites: List[SuiteRecord] = Field(default_factory=list)
    passed: bool = Field(..., description="False when any check failed")
    elapsed: float = Field(..., description="Wall-clock seconds")


def write_schema(path: Path = SCHEMA_PATH) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(CommandRecord.model_json_schema(), indent=2) + "\n", encoding="utf-8")
    return path


if __name__ == "__main__":
    print(f"wrote {write_schema()}")
