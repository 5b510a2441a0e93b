"""
Central hyperplane arrangements over ℚ and their intersection lattices.

Flats are identified by the set of hyperplanes containing them, so the
intersection lattice is a closure computation: start from the ambient
space, intersect with every hyperplane not already containing the flat,
and deduplicate by that set. Order is reverse inclusion, which is
inclusion of the hyperplane sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, NamedTuple

from pydantic import BaseModel, ConfigDict, field_validator

from splitbasis.lattices import Family, LatticeFamily
from splitbasis.linalg import FlatSubspace, Vector, primitive, to_vector
from splitbasis.observe import get_logger
from splitbasis.poset import BoundedPoset, Poset

logger = get_logger("geometry")


class GeometryError(Exception):
    """Raised for malformed arrangements or regions."""


class GenericityViolated(GeometryError):
    def __init__(self, vector: Sequence[Any], detail: str = ""):
        self.vector = tuple(vector)
        shown = ",".join(str(x) for x in self.vector)
        super().__init__(f"vector ({shown}) is not generic" + (f": {detail}" if detail else ""))


class SingularRegion(GeometryError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"constraint matrix of region {label} is singular")


class Hyperplane(BaseModel):
    """{x : normal·x = offset}; normals are stored primitive with a positive leading entry."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    normal: tuple[int, ...]
    offset: Fraction = Fraction(0)

    @field_validator("normal", mode="before")
    @classmethod
    def _primitive(cls, normal: Iterable[Any]) -> tuple[int, ...]:
        vector = primitive(to_vector(normal))
        if not any(vector):
            raise ValueError("normal must be nonzero")
        leading = next(x for x in vector if x)
        return tuple(-x for x in vector) if leading < 0 else vector

    @field_validator("offset", mode="before")
    @classmethod
    def _exact(cls, offset: Any) -> Fraction:
        return Fraction(offset)

    @property
    def label(self) -> str:
        terms = []
        for i, c in enumerate(self.normal, start=1):
            if c:
                sign = "-" if c < 0 else "+"
                body = f"x{i}" if abs(c) == 1 else f"{abs(c)}x{i}"
                terms.append(f"{sign} {body}")
        text = " ".join(terms).removeprefix("+ ")
        return f"{text} = {self.offset}"

    def as_flat(self) -> FlatSubspace:
        return FlatSubspace(len(self.normal), [self.normal], [self.offset])


class Flat(NamedTuple):
    """A flat together with the indices of the hyperplanes containing it."""

    space: FlatSubspace
    walls: frozenset[int]


class Arrangement:
    """A finite arrangement of linear hyperplanes, optionally restricted to an ambient subspace."""

    def __init__(
        self,
        dim: int,
        hyperplanes: Iterable[Hyperplane],
        ambient: FlatSubspace | None = None,
        name: str = "",
    ):
        self.dim = dim
        self.hyperplanes: tuple[Hyperplane, ...] = tuple(hyperplanes)
        self.ambient = ambient if ambient is not None else FlatSubspace(dim)
        self.name = name or f"arrangement in Q^{dim}"
        normals = [h.normal for h in self.hyperplanes]
        if len(set(normals)) != len(normals):
            raise GeometryError("duplicate hyperplanes (up to scaling)")
        if any(len(n) != dim for n in normals):
            raise GeometryError(f"hyperplane normals must have length {dim}")
        self._lattice: BoundedPoset | None = None
        self._generic: dict[Vector, bool] = {}

    @property
    def central(self) -> bool:
        return all(h.offset == 0 for h in self.hyperplanes)

    @property
    def rank(self) -> int:
        return self.ambient.dim - self.center().dim

    def center(self) -> FlatSubspace:
        flat = self.ambient
        for h in self.hyperplanes:
            flat = flat.intersect(h.as_flat())
        return flat

    @property
    def essential(self) -> bool:
        return self.center().dim == 0

    def walls_containing(self, flat: FlatSubspace) -> frozenset[int]:
        return frozenset(
            i for i, h in enumerate(self.hyperplanes) if flat.in_hyperplane(h.normal, h.offset)
        )

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __repr__(self) -> str:
        return (
            f"Arrangement({self.name!r}, {len(self)} hyperplanes, ambient dim {self.ambient.dim})"
        )


# =============================================================================
# Constructors
# =============================================================================


def _form(n: int, terms: dict[int, int]) -> list[int]:
    row = [0] * n
    for i, c in terms.items():
        row[i - 1] += c
    return row


def _type_d_normals(n: int) -> list[list[int]]:
    normals = []
    for i, j in combinations(range(1, n + 1), 2):
        normals.append(_form(n, {i: 1, j: -1}))
        normals.append(_form(n, {i: 1, j: 1}))
    return normals


@lru_cache(maxsize=32)
def _coxeter(family: Family, n: int, T: tuple[int, ...]) -> Arrangement:
    if family in (Family.A, Family.AT):
        # Π_n(T) keeps x_i = x_j for i, j < n and x_t = x_n for t ∈ T
        pairs = [
            (i, j)
            for i, j in combinations(range(1, n + 1), 2)
            if family == Family.A or j < n or i in T
        ]
        normals = [_form(n, {i: 1, j: -1}) for i, j in pairs]
        ambient = FlatSubspace(n, [[1] * n])
    else:
        normals = _type_d_normals(n)
        if family == Family.B:
            normals += [_form(n, {i: 1}) for i in range(1, n + 1)]
        elif family == Family.DB:
            normals += [_form(n, {t: 1}) for t in T]
        ambient = None
    name = LatticeFamily(family=family, n=n, T=T).instance_id
    return Arrangement(n, (Hyperplane(normal=v) for v in normals), ambient, name)


def coxeter_arrangement(family: str | Family, n: int, T: Iterable[int] = ()) -> Arrangement:
    """Braid (restricted to Σx = 0), B_n, D_n, DB_n(T) or the arrangement of Π_n(T)."""
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    return _coxeter(params.family, params.n, params.T)


def default_vector(family: str | Family, n: int) -> tuple[int, ...] | None:
    """(-1, ..., -1, n-1) for type A; (1, 2, 4, ..., 2^(n-1)) for B, D and DB; none for Π_n(T)."""
    family = Family(family)
    if family == Family.A:
        return (*([-1] * (n - 1)), n - 1)
    if family in (Family.B, Family.D, Family.DB):
        return tuple(2**i for i in range(n))
    return None


# =============================================================================
# Intersection lattice
# =============================================================================


def flat_closure(
    start: FlatSubspace, hyperplanes: Sequence[Hyperplane], walls: Iterable[int] = ()
) -> dict[frozenset[int], FlatSubspace]:
    """Every nonempty intersection of ``start`` with a subfamily, keyed by containing walls."""

    def containing(flat: FlatSubspace) -> frozenset[int]:
        return frozenset(
            i for i, h in enumerate(hyperplanes) if flat.in_hyperplane(h.normal, h.offset)
        )

    root = frozenset(walls) | containing(start)
    found = {root: start}
    frontier = [root]
    while frontier:
        key = frontier.pop()
        flat = found[key]
        for i, h in enumerate(hyperplanes):
            if i in key:
                continue
            meet = flat.intersect(h.as_flat())
            if meet.is_empty:
                continue
            walls_of_meet = containing(meet)
            if walls_of_meet not in found:
                found[walls_of_meet] = meet
                frontier.append(walls_of_meet)
    return found


def flat_poset(flats: dict[frozenset[int], FlatSubspace]) -> Poset:
    payload = {flat.label: Flat(flat, walls) for walls, flat in flats.items()}
    if len(payload) != len(flats):
        raise GeometryError("distinct flats share a label")
    return Poset.from_relation(
        payload, lambda x, y: payload[x].walls <= payload[y].walls, payload
    )


def intersection_lattice(a: Arrangement) -> BoundedPoset:
    """L_A ordered by reverse inclusion; bottom is the ambient space, top the center."""
    if a._lattice is None:
        flats = flat_closure(a.ambient, a.hyperplanes)
        a._lattice = BoundedPoset.of(flat_poset(flats))
        logger.debug(
            "intersection lattice",
            extra={"extra_fields": {"arrangement": a.name, "flats": len(flats)}},
        )
    return a._lattice


def flat_label(a: Arrangement, flat: FlatSubspace) -> str:
    """Label of ``flat`` in the intersection lattice; it must be one of its flats."""
    lattice = intersection_lattice(a)
    if flat.label not in lattice:
        raise GeometryError(f"{flat.label} is not a flat of {a.name}")
    return flat.label


# =============================================================================
# Genericity
# =============================================================================


def is_generic(a: Arrangement, v: Sequence[Any]) -> bool:
    """No flat of dimension at least 1 lies in the hyperplane orthogonal to v."""
    key = to_vector(v)
    if key not in a._generic:
        if not any(key):
            a._generic[key] = False
        else:
            lattice = intersection_lattice(a)
            a._generic[key] = not any(
                lattice.payload[x].space.dim >= 1 and lattice.payload[x].space.in_hyperplane(key)
                for x in lattice.elements
            )
    return a._generic[key]


def is_generic_on_lines(a: Arrangement, v: Sequence[Any]) -> bool:
    """The shortcut test: only the 1-dimensional flats are checked."""
    key = to_vector(v)
    lattice = intersection_lattice(a)
    return any(key) and not any(
        lattice.payload[x].space.dim == 1 and lattice.payload[x].space.in_hyperplane(key)
        for x in lattice.elements
    )


def genericity_shortcut_agrees(a: Arrangement, v: Sequence[Any]) -> tuple[bool, bool, bool]:
    """(full test, 1-dimensional shortcut, whether they agree)."""
    full = is_generic(a, v)
    lines = is_generic_on_lines(a, v)
    if full != lines:
        logger.warning(
            "genericity shortcut disagrees",
            extra={"extra_fields": {"arrangement": a.name, "full": full, "lines": lines}},
        )
    return full, lines, full == lines


def require_generic(a: Arrangement, v: Sequence[Any]) -> None:
    if not is_generic(a, v):
        raise GenericityViolated(v, f"a flat of {a.name} lies in its orthogonal hyperplane")
