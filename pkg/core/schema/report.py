from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"


class CheckReport(BaseModel):
    """Outcome of one check: findings live in the certificate, never in exceptions."""

    model_config = ConfigDict(populate_by_name=True)

    check: str
    passed: bool = Field(alias="pass")
    status: str = PASS
    certificate: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @classmethod
    def ok(
        cls, check: str, certificate: Optional[Dict[str, Any]] = None, notes: Optional[List[str]] = None
    ) -> "CheckReport":
        return cls(check=check, passed=True, status=PASS, certificate=certificate or {}, notes=notes or [])

    @classmethod
    def fail(
        cls, check: str, certificate: Optional[Dict[str, Any]] = None, notes: Optional[List[str]] = None
    ) -> "CheckReport":
        return cls(check=check, passed=False, status=FAIL, certificate=certificate or {}, notes=notes or [])

    @classmethod
    def skipped(cls, check: str, reason: str, vacuous: bool = False) -> "CheckReport":
        """A skip is vacuously passing when the check does not apply to the input."""
        return cls(
            check=check,
            passed=vacuous,
            status=SKIPPED,
            certificate={"reason": reason, "not_applicable": vacuous},
        )

    @classmethod
    def inconclusive(
        cls, check: str, certificate: Optional[Dict[str, Any]] = None, notes: Optional[List[str]] = None
    ) -> "CheckReport":
        return cls(
            check=check, passed=False, status=INCONCLUSIVE, certificate=certificate or {}, notes=notes or []
        )

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class PipelineReport(BaseModel):
    source: str
    seed: int
    steps: List[CheckReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "seed": self.seed,
            "pass": self.passed,
            "steps": [step.to_json_dict() for step in self.steps],
        }
