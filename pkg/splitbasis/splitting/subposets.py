"""Splitting subposets and their fundamental cycles."""

from __future__ import annotations

from splitbasis.homology import ChainVector, SimplicialComplex, boolean_cycle_formula
from splitbasis.lattices import Family, LatticeFamily, build_family_lattice
from splitbasis.poset import BoundedPoset, Poset, order_complex, proper_part
from splitbasis.splitting.permutations import (
    SignedPermutation,
    SplitPositions,
    split_permutation,
    split_signed,
)


def _embed(ambient: BoundedPoset, labels: set[str]) -> Poset:
    missing = sorted(label for label in labels if label not in ambient)
    if missing:
        raise ValueError(f"split images outside the ambient lattice: {missing[:3]}")
    return ambient.induced(labels)


def splitting_subposet_A(w: SignedPermutation, ambient: BoundedPoset | None = None) -> Poset:
    """Π_ω: every split of ω, inside Π_n (or a subposet such as Π_n(T))."""
    if ambient is None:
        ambient = build_family_lattice(LatticeFamily(family=Family.A, n=w.n))
    labels = {str(split_permutation(w, s)) for s in SplitPositions.all(w.n, "A")}
    return _embed(ambient, labels)


def splitting_subposet_B(w: SignedPermutation, ambient: BoundedPoset | None = None) -> Poset:
    """Π_{ω,ε}: every split of (ω, ε) at a subset of {0, ..., n-1}."""
    if ambient is None:
        ambient = build_family_lattice(LatticeFamily(family=Family.B, n=w.n))
    labels = {str(split_signed(w, s)) for s in SplitPositions.all(w.n, "B")}
    return _embed(ambient, labels)


def splitting_subposet_D(w: SignedPermutation, ambient: BoundedPoset | None = None) -> Poset:
    """Π̃_{ω,ε}: splits of (ω, ε) and (ω, ε′) at subsets whose minimum is not 1.

    Images of the two sign vectors coincide whenever ω(1) ends up alone or in
    the zero block; the label set collapses them.
    """
    if ambient is None:
        ambient = build_family_lattice(LatticeFamily(family=Family.D, n=w.n))
    flipped = w.flip_first()
    labels = set()
    for s in SplitPositions.all(w.n, "D"):
        labels.add(str(split_signed(w, s)))
        labels.add(str(split_signed(flipped, s)))
    return _embed(ambient, labels)


def splitting_subposet(
    w: SignedPermutation, kind: str, ambient: BoundedPoset | None = None
) -> Poset:
    builders = {"A": splitting_subposet_A, "B": splitting_subposet_B, "D": splitting_subposet_D}
    return builders[kind](w, ambient)


def ambient_complex(ambient: BoundedPoset) -> SimplicialComplex:
    return order_complex(proper_part(ambient))


def rho_cycle(
    subposet: Poset, ambient: BoundedPoset, complex_: SimplicialComplex | None = None
) -> ChainVector:
    """Fundamental cycle of the subposet's proper part, as a chain of Δ(ambient proper part)."""
    if complex_ is None:
        complex_ = ambient_complex(ambient)
    return boolean_cycle_formula(subposet, complex_)
