"""Simplicial complexes and integer chains."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from itertools import combinations
from typing import Any

Simplex = tuple[str, ...]


class HomologyError(Exception):
    """Base error for chain-level computations."""


class RankNotOne(HomologyError):
    def __init__(self, rank: int):
        self.rank = rank
        super().__init__(f"top cycle space has rank {rank}, expected 1")


class NotACycle(HomologyError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"chain #{index} has nonzero boundary")


class SizeMismatch(HomologyError):
    def __init__(self, cycles: int, other: int, what: str):
        self.cycles = cycles
        self.other = other
        super().__init__(f"{cycles} cycles against {other} {what}")


class FaceNotInComplex(HomologyError):
    def __init__(self, face: Sequence[str]):
        self.face = tuple(face)
        super().__init__(f"simplex {list(face)} is not a face of the complex")


class SimplicialComplex:
    """Complex generated by its facets; faces per dimension are built on demand.

    Vertex order is fixed at construction and every simplex is stored as the
    tuple of its vertex labels in that order.
    """

    def __init__(self, vertices: Sequence[str], facets: Iterable[Sequence[str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise HomologyError("vertex labels must be unique")
        self._position = {v: i for i, v in enumerate(self.vertices)}
        ordered = {self.sort_simplex(f) for f in facets}
        # drop facets contained in larger ones
        kept = []
        for face in sorted(ordered, key=len, reverse=True):
            as_set = set(face)
            if not any(as_set < set(other) for other in kept):
                kept.append(face)
        self.facets: tuple[Simplex, ...] = tuple(sorted(kept, key=self.key))
        self.dim = max((len(f) - 1 for f in self.facets), default=-1)
        self._faces: dict[int, tuple[Simplex, ...]] = {}
        self._face_index: dict[int, dict[Simplex, int]] = {}
        self._boundary_ranks: dict[int, Any] = {}

    def key(self, simplex: Sequence[str]) -> tuple[int, ...]:
        return tuple(self._position[v] for v in simplex)

    def sort_simplex(self, simplex: Sequence[str]) -> Simplex:
        try:
            return tuple(sorted(simplex, key=self._position.__getitem__))
        except KeyError:
            raise FaceNotInComplex(simplex) from None

    def oriented(self, simplex: Sequence[str]) -> tuple[Simplex, int]:
        """Sort a vertex list into complex order; return it with the permutation sign."""
        if any(v not in self._position for v in simplex):
            raise FaceNotInComplex(simplex)
        keys = [self._position[v] for v in simplex]
        sign = 1
        for i, j in combinations(range(len(keys)), 2):
            if keys[i] > keys[j]:
                sign = -sign
        return self.sort_simplex(simplex), sign

    def faces(self, k: int) -> tuple[Simplex, ...]:
        if k not in self._faces:
            if k < 0 or k > self.dim:
                found: set[Simplex] = set()
            else:
                found = {
                    sub
                    for facet in self.facets
                    if len(facet) > k
                    for sub in combinations(facet, k + 1)
                }
            self._faces[k] = tuple(sorted(found, key=self.key))
            self._face_index[k] = {face: i for i, face in enumerate(self._faces[k])}
        return self._faces[k]

    def face_index(self, k: int) -> dict[Simplex, int]:
        self.faces(k)
        return self._face_index[k]

    def contains(self, simplex: Sequence[str]) -> bool:
        if any(v not in self._position for v in simplex):
            return False
        face = self.sort_simplex(simplex)
        return face in self.face_index(len(face) - 1)

    def subcomplex(self, facets: Iterable[Sequence[str]]) -> SimplicialComplex:
        """Subcomplex on the given faces, keeping this complex's vertex order."""
        facets = [self.sort_simplex(f) for f in facets]
        for facet in facets:
            if not self.contains(facet):
                raise FaceNotInComplex(facet)
        used = {v for f in facets for v in f}
        return SimplicialComplex([v for v in self.vertices if v in used], facets)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self.vertices)} vertices, "
            f"{len(self.facets)} facets, dim {self.dim})"
        )


class ChainVector:
    """Finite ℤ-combination of oriented simplices of one dimension."""

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension: int, terms: Mapping[Simplex, int] | None = None):
        self.dimension = dimension
        self.terms: dict[Simplex, int] = {}
        for simplex, coefficient in (terms or {}).items():
            if len(simplex) != dimension + 1:
                raise HomologyError(
                    f"simplex {list(simplex)} does not have dimension {dimension}"
                )
            if coefficient:
                self.terms[tuple(simplex)] = int(coefficient)

    def coefficient(self, simplex: Sequence[str]) -> int:
        return self.terms.get(tuple(simplex), 0)

    def support(self) -> list[Simplex]:
        return sorted(self.terms)

    def leading(self) -> Simplex:
        """Lexicographically least simplex in the support."""
        return min(self.terms)

    def __iter__(self) -> Iterator[tuple[Simplex, int]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainVector):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dimension, frozenset(self.terms.items())))

    def __add__(self, other: ChainVector) -> ChainVector:
        if self.dimension != other.dimension:
            raise HomologyError("cannot add chains of different dimensions")
        terms = dict(self.terms)
        for simplex, coefficient in other.terms.items():
            terms[simplex] = terms.get(simplex, 0) + coefficient
        return ChainVector(self.dimension, terms)

    def __neg__(self) -> ChainVector:
        return self.scaled(-1)

    def __sub__(self, other: ChainVector) -> ChainVector:
        return self + (-other)

    def scaled(self, factor: int) -> ChainVector:
        return ChainVector(self.dimension, {s: c * factor for s, c in self.terms.items()})

    def normalized(self) -> ChainVector:
        """Sign fixed so that the leading simplex has a positive coefficient."""
        if self.terms and self.terms[self.leading()] < 0:
            return -self
        return self

    def is_unit(self) -> bool:
        return all(abs(c) == 1 for c in self.terms.values())

    def __repr__(self) -> str:
        shown = " ".join(f"{c:+d}{list(s)}" for s, c in list(self)[:4])
        more = " ..." if len(self.terms) > 4 else ""
        return f"ChainVector(dim={self.dimension}, {len(self.terms)} terms: {shown}{more})"


def boundary(chain: ChainVector) -> ChainVector:
    """Simplicial boundary; the boundary of a 0-chain is its augmentation on the empty simplex."""
    terms: dict[Simplex, int] = {}
    for simplex, coefficient in chain.terms.items():
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            terms[face] = terms.get(face, 0) + (-1) ** i * coefficient
    return ChainVector(chain.dimension - 1, terms)


def is_cycle(chain: ChainVector) -> bool:
    return not boundary(chain)
