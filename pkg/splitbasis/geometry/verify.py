"""
Geometric verification: bounded regions of a generic slice give a homology basis.

For each region whose slice is nonempty and bounded, the z-map of its closure
is a Boolean subposet of the intersection lattice; the fundamental cycles of
their proper parts form a basis of the top homology of the lattice's proper
part. The cycles are computed here from kernels, independently of the
splitting formula, and then compared with the splitting cycles through γ.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Any

from splitbasis.geometry.arrangement import (
    GeometryError,
    coxeter_arrangement,
    default_vector,
    genericity_shortcut_agrees,
    intersection_lattice,
)
from splitbasis.geometry.regions import (
    Region,
    all_regions,
    bounded_slice_test,
    chamber_signs,
    interior_is_open,
    predicate_witness,
    region_divides,
)
from splitbasis.geometry.slice import flat_isomorphism, z_map_region, zaslavsky_check
from splitbasis.homology import (
    ChainVector,
    HomologyError,
    SimplicialComplex,
    embedded_subcomplex,
    fundamental_cycle_top,
    top_cycle_rank,
)
from splitbasis.lattices import Family, LatticeFamily, build_family_lattice
from splitbasis.linalg import to_vector
from splitbasis.observe import get_logger, traced
from splitbasis.poset import PosetError, boolean_atoms, moebius
from splitbasis.reports import CertificateReport, Counts, RegionRow, RegionsReport
from splitbasis.splitting import (
    ambient_complex,
    basis_index_set,
    certify_cycles,
    rho_cycle,
    splitting_subposet,
)

logger = get_logger("geometry.verify")


def _resolve_vector(params: LatticeFamily, v: Sequence[Any] | None) -> tuple[Any, ...]:
    vector = tuple(v) if v is not None else default_vector(params.family, params.n)
    if vector is None:
        raise GeometryError(f"{params.instance_id} has no default generic vector")
    if len(vector) != params.n:
        raise GeometryError(f"vector of length {len(vector)} for n={params.n}")
    return vector


def _relabel(
    chain: ChainVector, gamma_inverse: dict[str, str], target: SimplicialComplex
) -> ChainVector:
    terms: dict[tuple[str, ...], int] = {}
    for simplex, coefficient in chain:
        face, sign = target.oriented([gamma_inverse[label] for label in simplex])
        terms[face] = terms.get(face, 0) + sign * coefficient
    return ChainVector(chain.dimension, terms)


def _matches_splitting(
    params: LatticeFamily, bounded: list[Region], cycles: list[ChainVector]
) -> tuple[bool, str]:
    """Each geometric cycle, carried back through γ, is ± the splitting cycle of its label."""
    gamma, reason = flat_isomorphism(params.family, params.n, params.T)
    if gamma is None:
        return False, f"γ is not an isomorphism: {reason}"
    inverse = {flat: label for label, flat in gamma.items()}
    lattice = build_family_lattice(params)
    complex_ = ambient_complex(lattice)
    differing = []
    for region, cycle in zip(bounded, cycles):
        carried = _relabel(cycle, inverse, complex_)
        subposet = splitting_subposet(region.perm, region.kind, lattice)
        rho = rho_cycle(subposet, lattice, complex_)
        if carried != rho and carried != -rho:
            differing.append(region.label)
    if differing:
        return False, f"differ at {differing[:5]}"
    return True, f"{len(cycles)} cycles agree up to sign"


@traced
def verify_theorem_T2(
    family: str | Family, n: int, T: Iterable[int] = (), v: Sequence[Any] | None = None
) -> CertificateReport:
    """Bounded regions → z-map subposets → kernel cycles → both basis certificates."""
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    vector = _resolve_vector(params, v)
    report = CertificateReport(
        instance=params.instance_id,
        family=params.family.value,
        n=n,
        T=list(params.T),
        vector=[str(x) for x in to_vector(vector)],
    )
    a = coxeter_arrangement(params.family, n, params.T)
    lattice = intersection_lattice(a)
    complex_ = ambient_complex(lattice)

    full, lines, agree = genericity_shortcut_agrees(a, vector)
    report.add_check("generic", full, "no flat of dimension >= 1 lies in v⊥")
    report.add_check("genericity_shortcut_agrees", agree, f"all flats {full}, lines {lines}")
    if not full:
        return report

    regions = list(all_regions(params.family, n, params.T))
    bounded = [r for r in regions if bounded_slice_test(r, vector)]
    predicate = {entry.label for entry in basis_index_set(params.family, n, params.T)}
    found = {r.label for r in bounded}
    report.add_check(
        "bounded_equals_predicate",
        found == predicate,
        f"{len(found)} bounded, {len(predicate)} by predicate"
        + (f"; symmetric difference {sorted(found ^ predicate)[:5]}" if found != predicate else ""),
    )

    cycles: list[ChainVector] = []
    failures: list[str] = []
    for region in bounded:
        try:
            subposet = z_map_region(region, a)
            boolean_atoms(subposet)
            cycles.append(fundamental_cycle_top(embedded_subcomplex(subposet, complex_)))
        except (GeometryError, PosetError, HomologyError) as exc:
            failures.append(f"{region.label}: {exc}")
    report.add_check(
        "z_map_boolean",
        not failures,
        f"{len(bounded)} face posets Boolean" if not failures else failures[0],
    )
    if failures:
        return report

    rank = top_cycle_rank(complex_)
    report.counts = Counts(
        elements=len(lattice), chains=len(complex_.facets), rank=rank, basis=len(cycles)
    )
    report.add_check(
        "size_matches_rank", len(cycles) == rank, f"{len(cycles)} cycles, rank {rank}"
    )
    certify_cycles(report, cycles, complex_, rank)
    matched, detail = _matches_splitting(params, bounded, cycles)
    report.add_check("matches_splitting_cycles", matched, detail)

    zaslavsky = zaslavsky_check(a, vector, regions)
    report.add_check(
        "zaslavsky",
        zaslavsky.passed,
        f"bounded {zaslavsky.bounded_regions}, slice sum {zaslavsky.slice_mobius_sum}, "
        f"|mu| {zaslavsky.top_mobius}, slice isomorphic {zaslavsky.slice_isomorphic}",
    )
    logger.info(
        "geometric basis verified",
        extra={"extra_fields": {"instance": params.instance_id, "passed": report.passed}},
    )
    return report


def regions_report(
    family: str | Family, n: int, T: Iterable[int] = (), v: Sequence[Any] | None = None
) -> RegionsReport:
    """Every region with its bounded flag, checked against the predicate and Zaslavsky."""
    params = LatticeFamily(family=family, n=n, T=tuple(T))
    vector = _resolve_vector(params, v)
    report = RegionsReport(
        instance=f"regions-{params.instance_id}",
        family=params.family.value,
        n=n,
        T=list(params.T),
        vector=[str(x) for x in to_vector(vector)],
    )
    a = coxeter_arrangement(params.family, n, params.T)
    lattice = intersection_lattice(a)
    full, lines, agree = genericity_shortcut_agrees(a, vector)
    report.add_check("generic", full, "no flat of dimension >= 1 lies in v⊥")
    report.add_check("genericity_shortcut_agrees", agree, f"all flats {full}, lines {lines}")
    if not full:
        return report

    regions = list(all_regions(params.family, n, params.T))
    expected_total = sum(abs(moebius(lattice, lattice.bottom, x)) for x in lattice.elements)
    report.total_count = len(regions)
    report.add_check(
        "region_count",
        len(regions) == expected_total,
        f"{len(regions)} regions, sum of |mu| {expected_total}",
    )
    signs = [chamber_signs(a, r) for r in regions]
    chambers = all(0 not in s for s in signs) and len(set(signs)) == len(signs)
    report.add_check(
        "chambers_distinct",
        chambers and all(interior_is_open(r) for r in regions),
        "interior points lie in distinct chambers",
    )
    if params.family in (Family.D, Family.DB):
        divided = [r.label for r in regions if r.kind == "D" and not region_divides(r)]
        report.add_check(
            "walls_divide",
            not divided,
            "x_w(1) = 0 divides every type D region" if not divided else str(divided[:5]),
        )

    predicate = {entry.label for entry in basis_index_set(params.family, n, params.T)}
    for region in regions:
        bounded = bounded_slice_test(region, vector)
        report.regions.append(
            RegionRow(
                label=region.label,
                bounded=bounded,
                witness=predicate_witness(region) if bounded else "",
            )
        )
    found = {row.label for row in report.regions if row.bounded}
    report.bounded_count = len(found)
    report.add_check(
        "bounded_equals_predicate",
        found == predicate,
        f"{len(found)} bounded of {len(regions)}, {len(predicate)} by predicate",
    )
    report.zaslavsky = zaslavsky_check(a, vector, regions)
    report.add_check("zaslavsky", report.zaslavsky.passed, "bounded count equals |sum mu|")
    return report
