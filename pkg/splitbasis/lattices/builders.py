"""Explicit construction of the partition lattices and their subposets."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from functools import lru_cache
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from splitbasis import config
from splitbasis.lattices.partitions import (
    SetPartition,
    SignedPartition,
    leq_refinement,
    leq_signed,
    partition_to_subspace,
    set_partitions,
    signed_partitions,
)
from splitbasis.observe import get_logger
from splitbasis.poset import BoundedPoset, Poset

logger = get_logger("lattices")


class Family(StrEnum):
    A = "A"
    B = "B"
    D = "D"
    DB = "DB"
    AT = "AT"


class LatticeError(Exception):
    """Raised when a lattice cannot be built as requested."""


class InvalidParameters(LatticeError, ValueError):
    def __init__(self, family: str, n: int, T: Iterable[int], reason: str):
        self.family = family
        self.n = n
        self.T = tuple(T)
        super().__init__(f"{family} with n={n}, T={set(self.T) or '{}'}: {reason}")


def check_parameters(family: str, n: int, T: Iterable[int] = ()) -> None:
    T = tuple(T)
    minimum = 2 if family == Family.D else 1
    if n < minimum:
        raise InvalidParameters(family, n, T, f"n must be at least {minimum}")
    if family in (Family.A, Family.B, Family.D) and T:
        raise InvalidParameters(family, n, T, "this family takes no T")
    if family == Family.DB and not set(T) <= set(range(1, n + 1)):
        raise InvalidParameters(family, n, T, f"T must lie in [1..{n}]")
    if family == Family.AT:
        if not T:
            raise InvalidParameters(family, n, T, "T must be nonempty")
        if not set(T) <= set(range(1, n)):
            raise InvalidParameters(family, n, T, f"T must lie in [1..{n - 1}]")


class LatticeFamily(BaseModel):
    """One lattice instance: family tag, n and (for DB and AT) the subset T."""

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int
    T: tuple[int, ...] = ()

    @field_validator("T", mode="before")
    @classmethod
    def _sorted_unique(cls, value: Iterable[int] | None) -> tuple[int, ...]:
        return tuple(sorted(set(value or ())))

    @model_validator(mode="after")
    def _valid_for_family(self) -> LatticeFamily:
        check_parameters(self.family, self.n, self.T)
        return self

    @property
    def instance_id(self) -> str:
        base = f"{self.family.value}-{self.n}"
        if self.family in (Family.DB, Family.AT):
            base += "-T{" + ",".join(str(t) for t in self.T) + "}"
        return base

    @property
    def signed(self) -> bool:
        return self.family in (Family.B, Family.D, Family.DB)


def _bounded(payload: Mapping[str, Any], leq: Callable[[Any, Any], bool]) -> BoundedPoset:
    poset = Poset.from_relation(payload, lambda x, y: leq(payload[x], payload[y]), payload)
    return BoundedPoset.of(poset)


def _restrict(lattice: BoundedPoset, keep: Callable[[Any], bool]) -> BoundedPoset:
    labels = [label for label in lattice.elements if keep(lattice.payload[label])]
    return BoundedPoset.of(lattice.induced(labels))


def build_Pi(n: int) -> BoundedPoset:
    check_parameters(Family.A, n)
    return _bounded({str(p): p for p in set_partitions(n)}, leq_refinement)


def build_PiB(n: int) -> BoundedPoset:
    check_parameters(Family.B, n)
    lattice = _bounded({str(p): p for p in signed_partitions(n)}, leq_signed)
    if n <= config.LATTICE_CHECK_MAX_N and not lattice.is_lattice():
        raise LatticeError(f"signed partitions of size {n} failed the meet/join check")
    return lattice


def build_PiD(n: int) -> BoundedPoset:
    check_parameters(Family.D, n)
    return _restrict(build_family_lattice(LatticeFamily(family=Family.B, n=n)), _not_pair_zero(()))


def build_PiDB(n: int, T: Iterable[int]) -> BoundedPoset:
    T = tuple(sorted(set(T)))
    check_parameters(Family.DB, n, T)
    return _restrict(build_family_lattice(LatticeFamily(family=Family.B, n=n)), _not_pair_zero(T))


def build_PiAT(n: int, T: Iterable[int]) -> BoundedPoset:
    T = frozenset(T)
    check_parameters(Family.AT, n, T)

    def keep(p: SetPartition) -> bool:
        block = p.block_of(n)
        return len(block) == 1 or bool(T & set(block))

    return _restrict(build_family_lattice(LatticeFamily(family=Family.A, n=n)), keep)


def _not_pair_zero(T: Iterable[int]) -> Callable[[SignedPartition], bool]:
    """Keep elements whose zero block is not {0, a} for a outside T."""
    allowed = frozenset(T)

    def keep(p: SignedPartition) -> bool:
        zero = p.zero_block
        return len(zero) != 2 or zero[1] in allowed

    return keep


@lru_cache(maxsize=64)
def build_family_lattice(params: LatticeFamily) -> BoundedPoset:
    """Lattice for one family instance, memoized per process."""
    if params.family == Family.A:
        lattice = build_Pi(params.n)
    elif params.family == Family.B:
        lattice = build_PiB(params.n)
    elif params.family == Family.D:
        lattice = build_PiD(params.n)
    elif params.family == Family.DB:
        lattice = build_PiDB(params.n, params.T)
    else:
        lattice = build_PiAT(params.n, params.T)
    logger.debug(
        "built lattice",
        extra={
            "extra_fields": {
                "instance": params.instance_id,
                "elements": len(lattice),
                "covers": len(lattice.covers),
            }
        },
    )
    return lattice


def element_codimension(p: SetPartition | SignedPartition) -> int:
    """Codimension of ℓ_π inside V (type B) or inside K (type A)."""
    flat = partition_to_subspace(p)
    if isinstance(p, SetPartition):
        return (p.n - 1) - flat.dim
    return p.n - flat.dim


def rank_mismatches(lattice: BoundedPoset) -> list[str]:
    """Elements whose poset rank, block-count rank and subspace codimension disagree."""
    bad = []
    for label in lattice.elements:
        p = lattice.payload[label]
        if not lattice.rank(label) == p.rank == element_codimension(p):
            bad.append(label)
    return bad


def apply_permutation(p: SetPartition, sigma: Mapping[int, int]) -> SetPartition:
    """Relabel every element v of ``p`` as sigma(v); values missing from sigma are fixed."""
    return p.relabel(sigma)
