"""
Run and suite models for the workbench.

A RunConfig is one command invocation; a SuiteSpec is a named list of rows,
each a RunConfig plus an instance id, an expected outcome and a slow flag.
"""

from __future__ import annotations

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from splitbasis import config
from splitbasis.geometry import coxeter_arrangement, is_generic
from splitbasis.lattices import Family, LatticeFamily, check_parameters
from splitbasis.splitting import MIN_BASIS_N, IndexSelector


class Command(StrEnum):
    LATTICE = "lattice"
    BASIS = "basis"
    REGIONS = "regions"
    ORBITS = "orbits"


class OutputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"


def parse_int_list(text: str | None) -> tuple[int, ...]:
    """'1,2' -> (1, 2); empty or None -> ()."""
    if not text:
        return ()
    return tuple(int(part) for part in text.split(",") if part.strip())


def parse_vector(text: str | None) -> tuple[str, ...] | None:
    """'1,2,4' or '-1,1/2' -> normalized rational strings."""
    if not text:
        return None
    return tuple(str(Fraction(part.strip())) for part in text.split(",") if part.strip())


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    family: Family = Family.A
    n: int
    T: tuple[int, ...] = ()
    vector: tuple[str, ...] | None = None
    indices: IndexSelector = "theorem"
    cross_check: bool = False
    fault: Literal["sign_flip"] | None = None
    max_n: int | None = None

    @field_validator("T", mode="before")
    @classmethod
    def _sorted_unique(cls, value: Any) -> tuple[int, ...]:
        if isinstance(value, str):
            value = parse_int_list(value)
        elif isinstance(value, int):
            value = (value,)
        return tuple(sorted(set(value or ())))

    @field_validator("vector", mode="before")
    @classmethod
    def _rational(cls, value: Any) -> tuple[str, ...] | None:
        if value is None:
            return None
        if isinstance(value, str):
            return parse_vector(value)
        return tuple(str(Fraction(x)) for x in value)

    @model_validator(mode="before")
    @classmethod
    def _orbits_are_type_at(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("command") in (Command.ORBITS, "orbits"):
            data = {**data, "family": Family.AT}
        return data

    @model_validator(mode="after")
    def _within_desk_scale(self) -> RunConfig:
        check_parameters(self.family, self.n, self.T)
        ceiling = self.max_n if self.max_n is not None else config.MAX_N[self.family.value]
        if self.n > ceiling:
            raise ValueError(
                f"n={self.n} exceeds the {self.family.value} ceiling {ceiling} (see --max-n)"
            )
        # smaller n leaves the proper part without top homology
        minimum = MIN_BASIS_N[self.family]
        if self.n < minimum:
            raise ValueError(f"{self.command.value} needs n >= {minimum} for {self.family}")
        if self.command == Command.REGIONS and self.family == Family.AT:
            raise ValueError("regions are not enumerated for AT; use basis for its check")
        if self.vector is not None and self.family == Family.AT:
            raise ValueError("AT has no generic vector; its basis is checked algebraically")
        if self.vector is not None and len(self.vector) != self.n:
            raise ValueError(f"vector has {len(self.vector)} entries for n={self.n}")
        if self.vector is not None and not is_generic(
            coxeter_arrangement(self.family, self.n, self.T), self.exact_vector
        ):
            raise ValueError(
                f"vector ({','.join(self.vector)}) is not generic: "
                "a flat of dimension >= 1 lies in its orthogonal hyperplane"
            )
        if self.command != Command.BASIS and (self.fault or self.indices != "theorem"):
            raise ValueError("--fault and --indices apply to basis only")
        if self.indices == "ltr" and self.family != Family.B:
            raise ValueError("the ltr index set is defined for type B only")
        return self

    @property
    def lattice_family(self) -> LatticeFamily:
        return LatticeFamily(family=self.family, n=self.n, T=self.T)

    @property
    def exact_vector(self) -> tuple[Fraction, ...] | None:
        return tuple(Fraction(x) for x in self.vector) if self.vector is not None else None

    @property
    def geometric(self) -> bool:
        """Whether a generic vector applies to this run."""
        return self.family != Family.AT


class SuiteRow(RunConfig):
    id: str
    expect: Literal["pass", "fail", "any"] = "pass"
    slow: bool = False

    def run_config(self) -> RunConfig:
        return RunConfig(**self.model_dump(exclude={"id", "expect", "slow"}))


class SuiteSpec(BaseModel):
    name: str
    description: str = ""
    rows: list[SuiteRow] = Field(min_length=1)

    def selected(self, include_slow: bool = False) -> list[SuiteRow]:
        return [row for row in self.rows if include_slow or not row.slow]


class OutputOptions(BaseModel):
    format: OutputFormat = OutputFormat.TEXT
    out: Path | None = None
    timing: bool = True
