"""
Report records shared by the verification layers and the workbench.

Every report is a pydantic model so that the CLI can emit it as JSON and
read it back unchanged. Check outcomes serialize under the key ``pass``.
"""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field


class CheckResult(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")
    detail: str = ""


class _Checked(BaseModel):
    """Base for reports that accumulate named checks."""

    model_config = ConfigDict(populate_by_name=True)

    checks: list[CheckResult] = Field(default_factory=list)
    millis: float = 0.0

    def add_check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))
        return bool(passed)

    def extend(self, checks: list[CheckResult], prefix: str = "") -> None:
        for check in checks:
            self.checks.append(
                CheckResult(name=f"{prefix}{check.name}", passed=check.passed, detail=check.detail)
            )

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


class BasisCertificate(BaseModel):
    """Outcome of the coefficient-matrix certificate for one cycle set."""

    size: int
    determinant: int
    facets: list[list[str]] = Field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.determinant in (1, -1)


class Counts(BaseModel):
    elements: int = 0
    chains: int = 0
    rank: int = 0
    basis: int = 0


class CertificateReport(_Checked):
    kind: Literal["certificate"] = "certificate"
    instance: str
    family: str
    n: int
    T: list[int] = Field(default_factory=list)
    vector: list[str] = Field(default_factory=list)
    counts: Counts = Field(default_factory=Counts)
    determinant: int | None = None


class HomologyDegree(BaseModel):
    degree: int
    rank: int
    torsion: list[int] = Field(default_factory=list)


class LatticeReport(_Checked):
    kind: Literal["lattice"] = "lattice"
    instance: str
    family: str
    n: int
    T: list[int] = Field(default_factory=list)
    elements: list[str] = Field(default_factory=list)
    covers: list[tuple[str, str]] = Field(default_factory=list)
    mobius: int = 0
    rank_profile: list[int] = Field(default_factory=list)
    top_rank: int = 0
    homology: list[HomologyDegree] = Field(default_factory=list)


class ZaslavskyReport(BaseModel):
    bounded_regions: int
    slice_mobius_sum: int
    top_mobius: int
    slice_isomorphic: bool

    @property
    def passed(self) -> bool:
        return (
            self.slice_isomorphic
            and self.bounded_regions == self.slice_mobius_sum == self.top_mobius
        )


class RegionRow(BaseModel):
    label: str
    bounded: bool
    witness: str = ""


class RegionsReport(_Checked):
    kind: Literal["regions"] = "regions"
    instance: str
    family: str
    n: int
    T: list[int] = Field(default_factory=list)
    vector: list[str] = Field(default_factory=list)
    regions: list[RegionRow] = Field(default_factory=list)
    bounded_count: int = 0
    total_count: int = 0
    zaslavsky: ZaslavskyReport | None = None


class OrbitReport(_Checked):
    kind: Literal["orbits"] = "orbits"
    instance: str
    n: int
    T: list[int] = Field(default_factory=list)
    group_order: int = 0
    expected_orbits: int = 0
    orbits: list[list[str]] = Field(default_factory=list)
    sizes: list[int] = Field(default_factory=list)
    regular: bool = False


AnyReport = Annotated[
    CertificateReport | LatticeReport | RegionsReport | OrbitReport, Field(discriminator="kind")
]


class SuiteRowResult(BaseModel):
    instance: str
    command: str
    passed: bool
    report: AnyReport | None = None
    error: str = ""


class SuiteReport(BaseModel):
    name: str
    rows: list[SuiteRowResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def summary(self) -> str:
        ok = sum(1 for row in self.rows if row.passed)
        return f"Suite {self.name}: {ok}/{len(self.rows)} rows passed"
