from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field

Provenance = Literal["closed-form", "derived", "trivial"]


class VerificationReport(BaseModel):
    check_id: str
    anchor: str
    expected: str
    provenance: Provenance
    computed: Union[float, list[float]]
    residual: float
    tolerance: float
    passed: bool
    wall_time: Optional[float] = None


class Summary(BaseModel):
    passed: int = 0
    failed: int = 0
    seconds: Optional[float] = None


class SuiteReport(BaseModel):
    config: dict[str, Any]
    checks: list[VerificationReport] = Field(default_factory=list)
    summary: Summary = Field(default_factory=Summary)

    @property
    def exit_code(self) -> int:
        return 0 if self.summary.failed == 0 else 1
