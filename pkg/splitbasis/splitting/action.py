"""
The action of S_T × S_{[n-1]∖T} on the splitting basis of Π_n(T).

A permutation σ fixing n and stabilizing T relabels partitions and so
maps Π_n(T) to itself. It carries ρ_ω to ±ρ_{σω}, which permutes the basis
cycles up to sign; the orbits of the index set are regular.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import permutations
from math import comb, factorial
from typing import NamedTuple

from splitbasis.homology import ChainVector, HomologyError, SimplicialComplex
from splitbasis.lattices import Family, LatticeFamily, apply_permutation, build_family_lattice
from splitbasis.observe import get_logger, traced
from splitbasis.poset import BoundedPoset, PosetError
from splitbasis.reports import OrbitReport
from splitbasis.splitting.bases import basis_index_set
from splitbasis.splitting.permutations import SignedPermutation
from splitbasis.splitting.subposets import ambient_complex, rho_cycle, splitting_subposet_A

logger = get_logger("splitting.action")

Relabeling = dict[int, int]


class ActionResult(NamedTuple):
    cycle: ChainVector
    target: SignedPermutation
    sign: int


def young_subgroup(n: int, T: Iterable[int]) -> Iterator[Relabeling]:
    """Every σ ∈ S_T × S_{[n-1]∖T}, as a value map fixing n."""
    inside = sorted(set(T))
    outside = [v for v in range(1, n) if v not in inside]
    for a in permutations(inside):
        for b in permutations(outside):
            sigma = dict(zip(inside, a))
            sigma.update(zip(outside, b))
            sigma[n] = n
            yield sigma


def young_generators(n: int, T: Iterable[int]) -> list[Relabeling]:
    """Adjacent transpositions inside T and inside [n-1]∖T."""
    inside = sorted(set(T))
    outside = [v for v in range(1, n) if v not in inside]
    gens = []
    for part in (inside, outside):
        for a, b in zip(part, part[1:]):
            gens.append({a: b, b: a})
    return gens


def inverse(sigma: Relabeling) -> Relabeling:
    return {v: k for k, v in sigma.items()}


def relabel_chain(
    chain: ChainVector, sigma: Relabeling, lattice: BoundedPoset, complex_: SimplicialComplex
) -> ChainVector:
    """Apply σ to every partition in every simplex, re-oriented in the complex's vertex order."""
    terms: dict[tuple[str, ...], int] = {}
    for simplex, coefficient in chain:
        image = [str(apply_permutation(lattice.payload[label], sigma)) for label in simplex]
        face, sign = complex_.oriented(image)
        terms[face] = terms.get(face, 0) + sign * coefficient
    return ChainVector(chain.dimension, terms)


def basis_cycle(
    w: SignedPermutation,
    lattice: BoundedPoset,
    complex_: SimplicialComplex,
    cache: dict[str, ChainVector] | None = None,
) -> ChainVector:
    key = str(w)
    if cache is not None and key in cache:
        return cache[key]
    cycle = rho_cycle(splitting_subposet_A(w, lattice), lattice, complex_)
    if cache is not None:
        cache[key] = cycle
    return cycle


def act(
    sigma: Relabeling,
    w: SignedPermutation,
    lattice: BoundedPoset,
    complex_: SimplicialComplex | None = None,
    cache: dict[str, ChainVector] | None = None,
) -> ActionResult:
    """σρ_ω, the index σω, and the sign relating σρ_ω to ρ_{σω} (0 if neither sign fits)."""
    if complex_ is None:
        complex_ = ambient_complex(lattice)
    source = basis_cycle(w, lattice, complex_, cache)
    image = relabel_chain(source, sigma, lattice, complex_)
    target = w.relabel(sigma)
    expected = basis_cycle(target, lattice, complex_, cache)
    sign = 1 if image == expected else -1 if image == -expected else 0
    return ActionResult(image, target, sign)


def _orbits(index: list[SignedPermutation], group: list[Relabeling]) -> list[list[str]]:
    seen: set[str] = set()
    orbits = []
    for w in index:
        if str(w) in seen:
            continue
        orbit = sorted({str(w.relabel(sigma)) for sigma in group})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


@traced
def orbit_report(n: int, T: Iterable[int]) -> OrbitReport:
    params = LatticeFamily(family=Family.AT, n=n, T=tuple(T))
    t = len(params.T)
    report = OrbitReport(
        instance=f"orbits-{params.instance_id}",
        n=n,
        T=list(params.T),
        group_order=factorial(t) * factorial(n - 1 - t),
        expected_orbits=comb(n - 2, t - 1),
    )
    index = [entry.perm for entry in basis_index_set(Family.AT, n, params.T)]
    group = list(young_subgroup(n, params.T))
    labels = {str(w) for w in index}

    orbits = _orbits(index, group)
    report.orbits = orbits
    report.sizes = [len(o) for o in orbits]
    report.regular = all(size == report.group_order for size in report.sizes)
    closed = all(set(o) <= labels for o in orbits)
    report.add_check("index_closed", closed, "σω stays in the index set")
    report.add_check(
        "orbit_count",
        len(orbits) == report.expected_orbits,
        f"{len(orbits)} orbits, expected {report.expected_orbits}",
    )
    report.add_check("regular", report.regular, f"sizes {report.sizes}")

    lattice = build_family_lattice(params)
    complex_ = ambient_complex(lattice)
    cycles: dict[str, ChainVector] = {}
    unsigned: list[str] = []
    not_inverse: list[str] = []
    try:
        for sigma in young_generators(n, params.T):
            for w in index:
                result = act(sigma, w, lattice, complex_, cycles)
                if result.sign == 0:
                    unsigned.append(f"{sigma}·{w}")
                back = relabel_chain(result.cycle, inverse(sigma), lattice, complex_)
                if back != cycles[str(w)]:
                    not_inverse.append(f"{sigma}·{w}")
    except (HomologyError, PosetError, ValueError) as exc:
        report.add_check("signed_permutation_action", False, str(exc))
        return report
    report.add_check(
        "signed_permutation_action",
        not unsigned,
        "generators permute basis cycles up to sign" if not unsigned else ", ".join(unsigned[:5]),
    )
    report.add_check(
        "inverse_roundtrip",
        not not_inverse,
        "act(σ⁻¹)∘act(σ) is the identity" if not not_inverse else ", ".join(not_inverse[:5]),
    )
    logger.info(
        "orbits computed",
        extra={"extra_fields": {"instance": report.instance, "orbits": len(orbits)}},
    )
    return report
