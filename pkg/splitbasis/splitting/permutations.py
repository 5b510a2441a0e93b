"""
Permutations, signed permutations and splitting at positions.

A signed permutation is written in one-line notation with barred letters
carrying a trailing apostrophe, e.g. ``2' 3 1``. Positions are 1-based.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from itertools import permutations, product
from typing import Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from splitbasis.lattices import SetPartition, SignedElement, SignedPartition


class SignedPermutation(BaseModel):
    """An element (ω, ε) of the hyperoctahedral group; ε defaults to all +1."""

    model_config = ConfigDict(frozen=True)

    omega: tuple[int, ...]
    epsilon: tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _default_signs(cls, data: object) -> object:
        if isinstance(data, dict) and not data.get("epsilon"):
            data = {**data, "epsilon": (1,) * len(data.get("omega", ()))}
        return data

    @field_validator("omega")
    @classmethod
    def _bijection(cls, omega: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(omega) != list(range(1, len(omega) + 1)):
            raise ValueError(f"{omega} is not a permutation of [1..{len(omega)}]")
        return omega

    @model_validator(mode="after")
    def _signs_match(self) -> SignedPermutation:
        if len(self.epsilon) != len(self.omega):
            raise ValueError("one sign per letter")
        if any(s not in (1, -1) for s in self.epsilon):
            raise ValueError("signs must be +1 or -1")
        return self

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Read ``"2' 3 1"``; compact words such as ``"3124"`` are accepted when n < 10."""
        tokens = text.split()
        if len(tokens) == 1 and len(tokens[0].replace("'", "")) > 1:
            tokens, word = [], tokens[0]
            for ch in word:
                if ch == "'":
                    tokens[-1] += "'"
                else:
                    tokens.append(ch)
        letters = [SignedElement.parse(tok) for tok in tokens]
        return cls(omega=tuple(e.value for e in letters), epsilon=tuple(e.sign for e in letters))

    def __str__(self) -> str:
        return " ".join(str(SignedElement(v, s)) for v, s in zip(self.omega, self.epsilon))

    @property
    def n(self) -> int:
        return len(self.omega)

    @property
    def bars(self) -> int:
        return sum(1 for s in self.epsilon if s < 0)

    @property
    def is_even(self) -> bool:
        return self.bars % 2 == 0

    def letter(self, i: int) -> SignedElement:
        return SignedElement(self.omega[i - 1], self.epsilon[i - 1])

    def flip_first(self) -> SignedPermutation:
        """(ω, ε′) where ε′ differs from ε only in the first sign."""
        return SignedPermutation(omega=self.omega, epsilon=(-self.epsilon[0], *self.epsilon[1:]))

    def relabel(self, sigma: Mapping[int, int]) -> SignedPermutation:
        """σω for a permutation σ of the values; signs stay attached to positions."""
        return SignedPermutation(
            omega=tuple(sigma.get(v, v) for v in self.omega), epsilon=self.epsilon
        )


def all_permutations(n: int) -> Iterator[SignedPermutation]:
    for omega in permutations(range(1, n + 1)):
        yield SignedPermutation(omega=omega)


def all_signed_permutations(n: int, even_only: bool = False) -> Iterator[SignedPermutation]:
    for omega in permutations(range(1, n + 1)):
        for epsilon in product((1, -1), repeat=n):
            if even_only and sum(1 for s in epsilon if s < 0) % 2:
                continue
            yield SignedPermutation(omega=omega, epsilon=epsilon)


# =============================================================================
# Split positions
# =============================================================================


class SplitPositions(BaseModel):
    """Strictly increasing cut positions; range [1, n-1] for type A, [0, n-1] otherwise."""

    model_config = ConfigDict(frozen=True)

    n: int
    kind: Literal["A", "B", "D"] = "A"
    positions: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _in_range(self) -> SplitPositions:
        low = 1 if self.kind == "A" else 0
        if list(self.positions) != sorted(set(self.positions)):
            raise ValueError("positions must be strictly increasing")
        if any(not low <= i <= self.n - 1 for i in self.positions):
            raise ValueError(f"positions must lie in [{low}, {self.n - 1}]")
        if self.kind == "D" and self.positions and self.positions[0] == 1:
            raise ValueError("type D splits may not start at position 1")
        return self

    @classmethod
    def all(cls, n: int, kind: Literal["A", "B", "D"] = "A") -> Iterator[SplitPositions]:
        low = 1 if kind == "A" else 0
        pool = range(low, n)
        for mask in product((False, True), repeat=len(pool)):
            chosen = tuple(i for i, keep in zip(pool, mask) if keep)
            if kind == "D" and chosen and chosen[0] == 1:
                continue
            yield cls(n=n, kind=kind, positions=chosen)


def _positions(s: SplitPositions | Iterable[int]) -> list[int]:
    return list(s.positions) if isinstance(s, SplitPositions) else sorted(set(s))


def split_permutation(omega: SignedPermutation, s: SplitPositions | Iterable[int]) -> SetPartition:
    cuts = [0, *_positions(s), omega.n]
    blocks = [omega.omega[a:b] for a, b in zip(cuts, cuts[1:])]
    return SetPartition(n=omega.n, blocks=blocks)


def split_signed(w: SignedPermutation, s: SplitPositions | Iterable[int]) -> SignedPartition:
    """Zero block {0, ω(1..i₁)} unbarred, later segments kept with their signs."""
    positions = _positions(s)
    cuts = [*positions, w.n]
    first = cuts[0]
    zero = w.omega[:first]
    blocks = [
        [w.letter(i) for i in range(a + 1, b + 1)]
        for a, b in zip(cuts, cuts[1:])
        if b > a
    ]
    return SignedPartition(n=w.n, zero_block=zero, signed_blocks=blocks)


# =============================================================================
# Maxima
# =============================================================================


def right_to_left_maxima(w: SignedPermutation) -> list[int]:
    """Positions i with ω(i) > ω(j) for every j > i."""
    positions = []
    best = 0
    for i in range(w.n, 0, -1):
        if w.omega[i - 1] > best:
            best = w.omega[i - 1]
            positions.append(i)
    return sorted(positions)


def left_to_right_maxima(w: SignedPermutation) -> list[int]:
    """Positions i with ω(i) > ω(j) for every j < i."""
    positions = []
    best = 0
    for i in range(1, w.n + 1):
        if w.omega[i - 1] > best:
            best = w.omega[i - 1]
            positions.append(i)
    return positions


def maxima_unbarred(w: SignedPermutation, positions: Iterable[int]) -> bool:
    return all(w.epsilon[i - 1] > 0 for i in positions)
