"""
Set partitions and signed partitions.

Text form: blocks separated by " | ", elements by spaces, a barred element
carries a trailing apostrophe. A signed partition always lists its zero
block first, e.g. ``0 5 7 | 1 2' 9 | 3 4' 6' 8``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from splitbasis.linalg import FlatSubspace


class SignedElement(NamedTuple):
    value: int
    sign: int = 1

    def __str__(self) -> str:
        return f"{self.value}'" if self.sign < 0 else str(self.value)

    @classmethod
    def parse(cls, token: str) -> SignedElement:
        token = token.strip()
        if token.endswith("'"):
            return cls(int(token[:-1]), -1)
        return cls(int(token), 1)


SignedBlock = tuple[SignedElement, ...]


def bar_block(block: Iterable[SignedElement]) -> SignedBlock:
    return tuple(SignedElement(e.value, -e.sign) for e in block)


def unbar_block(block: Iterable[SignedElement]) -> SignedBlock:
    return tuple(SignedElement(e.value, 1) for e in block)


def canonical_block(block: Iterable[SignedElement]) -> SignedBlock:
    """Value-sorted representative of {b, b̄} whose minimum is unbarred."""
    ordered = tuple(sorted((SignedElement(*e) for e in block), key=lambda e: e.value))
    if ordered and ordered[0].sign < 0:
        return bar_block(ordered)
    return ordered


def format_block(block: Iterable[SignedElement | int]) -> str:
    return " ".join(str(e) for e in block)


# =============================================================================
# Set partitions
# =============================================================================


class SetPartition(BaseModel):
    """A partition of [n] = {1, ..., n}; blocks sorted, ordered by minimum."""

    model_config = ConfigDict(frozen=True)

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @field_validator("blocks", mode="before")
    @classmethod
    def _canonical(cls, blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
        ordered = [tuple(sorted(block)) for block in blocks]
        return tuple(sorted((b for b in ordered), key=lambda b: b[0] if b else 0))

    @model_validator(mode="after")
    def _covers_ground_set(self) -> SetPartition:
        values = [v for block in self.blocks for v in block]
        if any(not block for block in self.blocks):
            raise ValueError("blocks must be nonempty")
        if sorted(values) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {self.blocks} do not partition [1..{self.n}]")
        return self

    def __str__(self) -> str:
        return " | ".join(format_block(block) for block in self.blocks)

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)

    def block_of(self, value: int) -> tuple[int, ...]:
        for block in self.blocks:
            if value in block:
                return block
        raise KeyError(value)

    def relabel(self, sigma: Mapping[int, int]) -> SetPartition:
        return SetPartition(
            n=self.n, blocks=[[sigma.get(v, v) for v in block] for block in self.blocks]
        )


def parse_set_partition(text: str, n: int | None = None) -> SetPartition:
    blocks = [[int(tok) for tok in part.split()] for part in text.split("|") if part.strip()]
    size = n if n is not None else sum(len(b) for b in blocks)
    return SetPartition(n=size, blocks=blocks)


def leq_refinement(pi: SetPartition, tau: SetPartition) -> bool:
    """π ≤ τ when every block of π lies inside a block of τ."""
    owner = _block_owner(tau)
    return all(len({owner[v] for v in block}) == 1 for block in pi.blocks)


@lru_cache(maxsize=4096)
def _block_owner(p: SetPartition) -> dict[int, int]:
    return {v: i for i, block in enumerate(p.blocks) for v in block}


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n] via restricted growth strings."""

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from grow([*prefix, b], max(top, b))

    if n == 0:
        return
    for word in grow([0], 0):
        blocks: dict[int, list[int]] = {}
        for value, b in enumerate(word, start=1):
            blocks.setdefault(b, []).append(value)
        yield SetPartition(n=n, blocks=list(blocks.values()))


# =============================================================================
# Signed partitions
# =============================================================================


class SignedPartition(BaseModel):
    """An element of Π_n^B: a zero block containing 0 plus canonical signed blocks."""

    model_config = ConfigDict(frozen=True)

    n: int
    zero_block: tuple[int, ...]
    signed_blocks: tuple[SignedBlock, ...] = ()

    @field_validator("zero_block", mode="before")
    @classmethod
    def _sorted_zero(cls, zero: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(set(int(v) for v in zero) | {0}))

    @field_validator("signed_blocks", mode="before")
    @classmethod
    def _canonical_blocks(
        cls, blocks: Iterable[Iterable[Sequence[int]]]
    ) -> tuple[SignedBlock, ...]:
        canonical = [canonical_block(SignedElement(*e) for e in block) for block in blocks]
        return tuple(sorted(canonical, key=lambda b: b[0].value if b else 0))

    @model_validator(mode="after")
    def _covers_ground_set(self) -> SignedPartition:
        if any(not block for block in self.signed_blocks):
            raise ValueError("signed blocks must be nonempty")
        if any(e.sign not in (1, -1) for block in self.signed_blocks for e in block):
            raise ValueError("signs must be +1 or -1")
        values = [v for v in self.zero_block if v] + [
            e.value for block in self.signed_blocks for e in block
        ]
        if sorted(values) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition [1..{self.n}] around the zero block")
        return self

    def __str__(self) -> str:
        parts = [format_block(self.zero_block)]
        parts += [format_block(block) for block in self.signed_blocks]
        return " | ".join(parts)

    @property
    def rank(self) -> int:
        return self.n - len(self.signed_blocks)

    def apply_sign(self, value: int) -> SignedPartition:
        """Image under the reflection x_value ↦ -x_value."""
        blocks = [
            [SignedElement(e.value, -e.sign if e.value == value else e.sign) for e in block]
            for block in self.signed_blocks
        ]
        return SignedPartition(n=self.n, zero_block=self.zero_block, signed_blocks=blocks)


def parse_signed_partition(text: str, n: int | None = None) -> SignedPartition:
    parts = [part.split() for part in text.split("|") if part.strip()]
    zero = [p for p in parts if "0" in p]
    if len(zero) != 1:
        raise ValueError(f"signed partition {text!r} needs exactly one zero block")
    blocks = [[SignedElement.parse(tok) for tok in p] for p in parts if p is not zero[0]]
    zero_values = [int(tok) for tok in zero[0]]
    size = n if n is not None else len(zero_values) - 1 + sum(len(b) for b in blocks)
    return SignedPartition(n=size, zero_block=zero_values, signed_blocks=blocks)


@lru_cache(maxsize=4096)
def _signed_sets(p: SignedPartition) -> tuple[frozenset[int], tuple[frozenset[SignedElement], ...]]:
    return frozenset(p.zero_block), tuple(frozenset(block) for block in p.signed_blocks)


def leq_signed(pi: SignedPartition, tau: SignedPartition) -> bool:
    """π ≤ τ in Π_n^B.

    Each block of π, or its bar, must lie in a block of τ, or else its values
    must lie in the zero block of τ.
    """
    if pi.n != tau.n:
        return False
    pi_zero, pi_blocks = _signed_sets(pi)
    tau_zero, tau_blocks = _signed_sets(tau)
    if not pi_zero <= tau_zero:
        return False
    for block in pi_blocks:
        barred = frozenset(bar_block(block))
        if any(block <= target or barred <= target for target in tau_blocks):
            continue
        if {e.value for e in block} <= tau_zero:
            continue
        return False
    return True


def signed_partitions(n: int) -> Iterator[SignedPartition]:
    """All canonical signed partitions of {0, 1, ..., n}."""
    for base in set_partitions(n + 1):
        # shift: value v of [n+1] stands for v-1, so 0 is the element 1
        blocks = [[v - 1 for v in block] for block in base.blocks]
        zero = next(b for b in blocks if 0 in b)
        rest = [b for b in blocks if 0 not in b]
        for signs in product(*[list(product((1, -1), repeat=len(b) - 1)) for b in rest]):
            signed = [
                [SignedElement(block[0], 1)]
                + [SignedElement(v, s) for v, s in zip(block[1:], sign)]
                for block, sign in zip(rest, signs)
            ]
            yield SignedPartition(n=n, zero_block=zero, signed_blocks=signed)


# =============================================================================
# Subspaces
# =============================================================================


def _unit(n: int, i: int, scale: int = 1) -> list[int]:
    row = [0] * n
    row[i - 1] = scale
    return row


def partition_to_subspace(p: SetPartition | SignedPartition, family: str = "") -> FlatSubspace:
    """Equations of ℓ_π; set partitions are additionally cut by Σ x_i = 0."""
    n = p.n
    equations: list[list[int]] = []
    if isinstance(p, SetPartition):
        if family and family not in ("A", "AT"):
            raise ValueError(f"set partitions belong to type A families, not {family}")
        for block in p.blocks:
            for a, b in zip(block, block[1:]):
                row = _unit(n, a)
                row[b - 1] -= 1
                equations.append(row)
        equations.append([1] * n)
        return FlatSubspace(n, equations)
    if family in ("A", "AT"):
        raise ValueError("signed partitions do not belong to type A families")
    for v in p.zero_block:
        if v:
            equations.append(_unit(n, v))
    for block in p.signed_blocks:
        for first, second in zip(block, block[1:]):
            row = _unit(n, first.value, first.sign)
            row[second.value - 1] -= second.sign
            equations.append(row)
    return FlatSubspace(n, equations)
