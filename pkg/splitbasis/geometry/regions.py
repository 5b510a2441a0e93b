"""
Regions of Coxeter arrangements as simplicial cones.

Each region is given by n independent strict inequalities f·x > 0 (type A
adds the ambient equation Σx = 0). The extreme rays are the columns of the
inverse of the square constraint matrix, scaled to primitive integers.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict

from splitbasis.geometry.arrangement import (
    Arrangement,
    GenericityViolated,
    GeometryError,
    SingularRegion,
    coxeter_arrangement,
    default_vector,
    require_generic,
)
from splitbasis.lattices import Family, LatticeFamily
from splitbasis.linalg import dot, primitive, solve_square, to_vector
from splitbasis.observe import get_logger
from splitbasis.splitting import (
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    right_to_left_maxima,
)

logger = get_logger("geometry.regions")


class Region(BaseModel):
    """A simplicial cone {x in the ambient space : f·x > 0 for every form f}."""

    model_config = ConfigDict(frozen=True)

    label: str
    kind: str
    perm: SignedPermutation
    forms: tuple[tuple[int, ...], ...]
    rays: tuple[tuple[int, ...], ...]

    def interior_point(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rays))

    def contains(self, x: Sequence[Any], strict: bool = True) -> bool:
        values = [dot(f, to_vector(x)) for f in self.forms]
        return all(v > 0 for v in values) if strict else all(v >= 0 for v in values)


def _unit(n: int, i: int, scale: int = 1) -> list[int]:
    row = [0] * n
    row[i - 1] = scale
    return row


def _difference(n: int, upper: tuple[int, int], lower: tuple[int, int]) -> tuple[int, ...]:
    """Form ε_u x_u - ε_l x_l for signed letters (value, sign)."""
    row = _unit(n, upper[0], upper[1])
    row[lower[0] - 1] -= lower[1]
    return tuple(row)


def region_forms(w: SignedPermutation, kind: str) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    """Defining forms and ambient equations of R_ω, R_{ω,ε} or R̃_{ω,ε}."""
    n = w.n
    letters = [(v, s) for v, s in zip(w.omega, w.epsilon)]
    if kind == "A":
        forms = [_difference(n, (b, 1), (a, 1)) for a, b in zip(w.omega, w.omega[1:])]
        return forms, [[1] * n]
    if kind == "B":
        first = tuple(_unit(n, letters[0][0], letters[0][1]))
        return [first, *(_difference(n, b, a) for a, b in zip(letters, letters[1:]))], []
    if kind == "D":
        if n < 2:
            raise GeometryError("type D regions need n >= 2")
        (a, _), second = letters[0], letters[1]
        forms = [_difference(n, second, (a, 1)), _difference(n, second, (a, -1))]
        forms += [_difference(n, b, c) for c, b in zip(letters[1:], letters[2:])]
        return forms, []
    raise GeometryError(f"unknown region kind {kind!r}")


def region_label(w: SignedPermutation, kind: str) -> str:
    return f"~{w}" if kind == "D" else str(w)


def region_for(w: SignedPermutation, kind: str) -> Region:
    label = region_label(w, kind)
    forms, equations = region_forms(w, kind)
    matrix = [to_vector(row) for row in [*equations, *forms]]
    columns = solve_square(matrix)
    if columns is None:
        raise SingularRegion(label)
    rays = tuple(primitive(col) for col in columns[len(equations) :])
    return Region(label=label, kind=kind, perm=w, forms=tuple(forms), rays=rays)


def region_kind(family: Family, w: SignedPermutation, T: Iterable[int] = ()) -> str:
    if family == Family.A:
        return "A"
    if family == Family.B:
        return "B"
    if family == Family.D:
        return "D"
    if family == Family.DB:
        return "B" if w.omega[0] in set(T) else "D"
    raise GeometryError(f"regions of {family} are not enumerated")


def all_regions(family: str | Family, n: int, T: Iterable[int] = ()) -> Iterator[Region]:
    """Regions labelled by S_n, B_n or D_n; for DB, B-type when ω(1) ∈ T and D-type otherwise."""
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    if params.family == Family.A:
        elements: Iterable[SignedPermutation] = all_permutations(n)
    elif params.family == Family.B:
        elements = all_signed_permutations(n)
    elif params.family == Family.D:
        elements = all_signed_permutations(n, even_only=True)
    elif params.family == Family.DB:
        T_set = set(params.T)
        elements = (
            w for w in all_signed_permutations(n) if w.omega[0] in T_set or w.is_even
        )
    else:
        raise GeometryError("regions of the Π_n(T) arrangement are not enumerated")
    for w in elements:
        yield region_for(w, region_kind(params.family, w, params.T))


def region_divides(region: Region) -> bool:
    """The wall x_{ω(1)} = 0 cuts R̃_{ω,ε} into R_{ω,ε} and R_{ω,ε′}."""
    if region.kind != "D":
        raise GeometryError("only type D regions are divided by a coordinate wall")
    w = region.perm
    halves = [region_for(w, "B"), region_for(w.flip_first(), "B")]
    inside = all(region.contains(ray, strict=False) for half in halves for ray in half.rays)
    wall = _unit(w.n, w.omega[0], w.epsilon[0])
    sides = [dot(wall, half.interior_point()) for half in halves]
    opposite = sides[0] > 0 > sides[1]
    covered = all(any(half.contains(ray, strict=False) for half in halves) for ray in region.rays)
    return inside and opposite and covered


# =============================================================================
# Bounded slice
# =============================================================================


def bounded_slice_test(region: Region, v: Sequence[Any]) -> bool:
    """R ∩ H_v is nonempty and bounded iff v·r > 0 for every extreme ray r."""
    vector = to_vector(v)
    values = [dot(vector, ray) for ray in region.rays]
    if any(value == 0 for value in values):
        raise GenericityViolated(v, f"orthogonal to a ray of {region.label}")
    return all(value > 0 for value in values)


def bounded_regions(
    family: str | Family, n: int, T: Iterable[int] = (), v: Sequence[Any] | None = None
) -> list[Region]:
    vector = v if v is not None else default_vector(family, n)
    if vector is None:
        raise GeometryError(f"no generic vector for {family}")
    require_generic(coxeter_arrangement(family, n, T), vector)
    return [r for r in all_regions(family, n, T) if bounded_slice_test(r, vector)]


def chamber_signs(a: Arrangement, region: Region) -> tuple[int, ...]:
    """Signs of the region's interior point against every hyperplane (0 marks a bad cone)."""
    point = region.interior_point()
    signs = []
    for h in a.hyperplanes:
        value = dot(h.normal, point) - h.offset
        signs.append((value > 0) - (value < 0))
    return tuple(signs)


def predicate_witness(region: Region) -> str:
    w = region.perm
    if region.kind == "A":
        return f"w(n)={w.omega[-1]}"
    positions = right_to_left_maxima(w)
    extra = f", w(1)={w.omega[0]}" if region.kind == "D" else ""
    return "rlm at " + ",".join(str(p) for p in positions) + extra


def interior_is_open(region: Region) -> bool:
    return region.contains(region.interior_point(), strict=True)
