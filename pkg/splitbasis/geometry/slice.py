"""The z-map of a region, the generic slice and the map γ between lattice models."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import Any

from splitbasis.geometry.arrangement import (
    Arrangement,
    GeometryError,
    coxeter_arrangement,
    flat_closure,
    flat_poset,
    intersection_lattice,
    require_generic,
)
from splitbasis.geometry.regions import Region, bounded_slice_test
from splitbasis.lattices import LatticeFamily, build_family_lattice, partition_to_subspace
from splitbasis.linalg import FlatSubspace, dot, to_vector
from splitbasis.observe import get_logger
from splitbasis.poset import Poset, is_isomorphic, moebius
from splitbasis.reports import ZaslavskyReport

logger = get_logger("geometry.slice")


def z_map_region(region: Region, a: Arrangement) -> Poset:
    """Flats spanned by the faces of cl(R), as a subposet of L_A.

    Faces of a simplicial cone are the subsets W of its walls; the face on
    W spans the ambient space cut by the forms in W.
    """
    lattice = intersection_lattice(a)
    base = a.ambient
    labels = set()
    for size in range(len(region.forms) + 1):
        for walls in combinations(region.forms, size):
            flat = base.intersect(FlatSubspace(a.dim, walls)) if walls else base
            if flat.label not in lattice:
                raise GeometryError(f"face of {region.label} spans {flat.label}, not a flat")
            labels.add(flat.label)
    return lattice.induced(labels)


def slice_lattice(a: Arrangement, v: Sequence[Any]) -> tuple[Poset, str]:
    """Intersection semilattice of the slice H_v = {x : v·x = v·v} and its bottom label."""
    vector = to_vector(v)
    require_generic(a, vector)
    h_v = a.ambient.intersect(FlatSubspace(a.dim, [vector], [dot(vector, vector)]))
    if h_v.is_empty:
        raise GeometryError("slicing hyperplane misses the ambient space")
    flats = flat_closure(h_v, a.hyperplanes)
    poset = flat_poset(flats)
    return poset, h_v.label


def zaslavsky_check(a: Arrangement, v: Sequence[Any], regions: Iterable[Region]) -> ZaslavskyReport:
    """Bounded regions of the slice against |Σ μ(0̂, x)| over its flats and |μ(0̂, 1̂)| of L."""
    lattice = intersection_lattice(a)
    sliced, bottom = slice_lattice(a, v)
    bounded = sum(1 for r in regions if bounded_slice_test(r, v))
    total = sum(moebius(sliced, bottom, x) for x in sliced.elements)
    without_top = lattice.induced(x for x in lattice.elements if x != lattice.top)
    report = ZaslavskyReport(
        bounded_regions=bounded,
        slice_mobius_sum=abs(total),
        top_mobius=abs(moebius(lattice, lattice.bottom, lattice.top)),
        slice_isomorphic=bool(is_isomorphic(sliced, without_top)),
    )
    logger.debug(
        "zaslavsky", extra={"extra_fields": {"arrangement": a.name, **report.model_dump()}}
    )
    return report


def flat_isomorphism(
    family: str, n: int, T: Iterable[int] = ()
) -> tuple[dict[str, str] | None, str]:
    """γ: π ↦ ℓ_π from the combinatorial lattice to the intersection lattice.

    Returns the label map when it is an order isomorphism, otherwise None and
    a reason.
    """
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    combinatorial = build_family_lattice(params)
    geometric = intersection_lattice(coxeter_arrangement(params.family, n, params.T))
    gamma = {}
    for label in combinatorial.elements:
        flat = partition_to_subspace(combinatorial.payload[label], params.family.value)
        if flat.label not in geometric:
            return None, f"{label} maps to {flat.label}, which is not a flat"
        gamma[label] = flat.label
    if len(set(gamma.values())) != len(geometric):
        return None, f"{len(set(gamma.values()))} images for {len(geometric)} flats"
    for x in combinatorial.elements:
        for y in combinatorial.elements:
            if combinatorial.leq(x, y) != geometric.leq(gamma[x], gamma[y]):
                return None, f"order differs at {x} <= {y}"
    return gamma, f"{len(gamma)} elements matched"
