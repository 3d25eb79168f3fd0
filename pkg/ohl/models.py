import orjson
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

@dataclass
class Witness:
    case: str
    lhs: str
    rhs: str

    def to_dict(self) -> dict[str, str]:
        return {
            "input": self.case,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }

@dataclass
class CheckResult:
    suite: str
    axiom: str
    degrees: int
    cases: int
    witness: Optional[Witness] = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> str:
        return orjson.dumps({
            "suite": self.suite,
            "axiom": self.axiom,
            "degrees": self.degrees,
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }, option=orjson.OPT_APPEND_NEWLINE).decode("utf-8")

    def __str__(self) -> str:
        line = f"{self.status} {self.suite}/{self.axiom} (degree <= {self.degrees}, {self.cases} cases)"
        if self.witness is None:
            return line

        return "\n".join([
            line,
            f"  input: {self.witness.case}",
            f"  lhs:   {self.witness.lhs}",
            f"  rhs:   {self.witness.rhs}",
        ])

@dataclass
class TermRow:
    coeff: Fraction
    basis: Any

    def __str__(self) -> str:
        return orjson.dumps({
            "coeff": str(self.coeff),
            "basis": str(self.basis),
        }, option=orjson.OPT_APPEND_NEWLINE).decode("utf-8")

@dataclass
class LawOutcome:
    cases: int
    failure_index: Optional[int] = None
    witness: Optional[Witness] = None
