"""Search records and verification report models."""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .types import CheckStatus, DissociationCertificate, FamilySpec, Spectrum


class SearchRecord(BaseModel):
    """One candidate graph kept by a search; serialized as a JSONL line."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    graph6: str = Field(alias="g6")
    n: int = Field(ge=0)
    diss: int = Field(ge=0)
    rho: float = Field(ge=0.0)
    canonical: str = Field(alias="canon")
    rho_exact_rank: Optional[int] = Field(
        default=None, description="Position in the exact ordering of the final window"
    )

    def to_jsonl(self) -> str:
        return self.model_dump_json(by_alias=True, exclude={"rho_exact_rank"})


class SearchResult(BaseModel):
    """Outcome of a minimum spectral radius search."""
    n: int
    psi: int
    source: str
    winner: SearchRecord
    ties: List[SearchRecord] = Field(default_factory=list)
    candidates_examined: int = Field(ge=0)
    wall_time: float = Field(ge=0.0, description="Seconds")
    winner_spec: Optional[FamilySpec] = None
    exact_comparisons: int = Field(default=0, ge=0)
    resumed_from_chunk: int = Field(default=0, ge=0)
    notes: List[str] = Field(default_factory=list)


class CheckResult(BaseModel):
    """A single PASS, FAIL or VACUOUS line of a verification report."""
    name: str
    status: CheckStatus
    detail: str = ""
    data: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


class VerifyReport(BaseModel):
    """Report of a verification suite."""
    suite: str
    status: CheckStatus
    checks: List[CheckResult] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    wall_time: float = Field(default=0.0, ge=0.0)

    @classmethod
    def from_checks(cls, suite: str, checks: List[CheckResult], **extra: Any) -> "VerifyReport":
        failed = any(c.status == CheckStatus.FAIL for c in checks) or not any(c.passed for c in checks)
        status = CheckStatus.FAIL if failed else CheckStatus.PASS
        return cls(suite=suite, status=status, checks=checks, **extra)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == CheckStatus.FAIL]


class CasePolyReport(BaseModel):
    """Audit of one case polynomial against its 3x3 determinant."""
    entry: str
    case_id: int
    samples: int = Field(ge=1)
    max_rel_err: float = Field(ge=0.0)
    status: CheckStatus
    failure: Optional[Dict[str, float]] = Field(
        default=None, description="First sample point exceeding the tolerance"
    )


class RhoReport(BaseModel):
    graph6: str
    n: int
    family: Optional[str] = None
    spectrum: Spectrum


class DissReport(BaseModel):
    graph6: str
    n: int
    diss: int
    method: str
    certificate: DissociationCertificate


class FamilyBuildReport(BaseModel):
    spec: FamilySpec
    n: int
    anchors: List[int]
    graph6: str
    dot: str


class ReducedSolveReport(BaseModel):
    spec: FamilySpec
    n: int
    rho_reduced: float
    rho_direct: float
    difference: float
    perron_residual: float
    status: CheckStatus


class Theorem1Report(BaseModel):
    n: int
    m: int
    l: int
    spec: FamilySpec
    graph6: str
    confirmed: Optional[bool] = Field(default=None, description="None when no search ran")
    method: Optional[str] = None
    search: Optional[SearchResult] = None
