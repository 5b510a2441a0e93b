"""
Basis certificates for top homology.

Two independent tests decide whether a list of top-dimensional cycles is a
ℤ-basis of ker ∂_top:

* the coefficient certificate pairs each cycle with a facet and requires
  the square matrix of coefficients ⟨ρ_i, F_j⟩ to have determinant ±1;
* the spanning test compares the ℤ-span of the cycles with the kernel.
  The kernel of an integer matrix is saturated, so cycles of the right
  count span it exactly when the invariant factors of the stacked cycle
  matrix are all 1.
"""

from __future__ import annotations

from collections.abc import Sequence

from splitbasis import config
from splitbasis.homology.complex import (
    ChainVector,
    NotACycle,
    Simplex,
    SimplicialComplex,
    SizeMismatch,
    is_cycle,
)
from splitbasis.homology.cycles import top_cycle_rank
from splitbasis.homology.snf import IntMatrix, integer_determinant, smith_normal_form
from splitbasis.observe import get_logger
from splitbasis.reports import BasisCertificate

logger = get_logger("homology.certificate")


def _require_cycles(cycles: Sequence[ChainVector]) -> None:
    for i, cycle in enumerate(cycles):
        if not is_cycle(cycle):
            raise NotACycle(i)


def verify_basis_certificate(
    cycles: Sequence[ChainVector],
    facets: Sequence[Simplex],
    rank: int | None = None,
) -> BasisCertificate:
    if len(cycles) != len(facets):
        raise SizeMismatch(len(cycles), len(facets), "facets")
    if rank is not None and rank != len(cycles):
        raise SizeMismatch(len(cycles), rank, "as the homology rank")
    _require_cycles(cycles)
    matrix = [[cycle.coefficient(facet) for facet in facets] for cycle in cycles]
    determinant = integer_determinant(matrix)
    return BasisCertificate(
        size=len(cycles),
        determinant=determinant,
        facets=[list(facet) for facet in facets],
    )


def _greedy_facets(cycles: Sequence[ChainVector]) -> list[Simplex] | None:
    used: set[Simplex] = set()
    chosen = []
    for cycle in cycles:
        free = [simplex for simplex in cycle.terms if simplex not in used]
        if not free:
            return None
        facet = min(free)
        used.add(facet)
        chosen.append(facet)
    return chosen


def _pivot_search(cycles: Sequence[ChainVector], budget: int) -> list[Simplex] | None:
    """Depth-first search for ±1 pivots under integer row reduction.

    Choosing a ±1 pivot in a row already reduced by the earlier pivots
    makes the selected minor triangular with unit diagonal.
    """
    nodes = 0

    def search(rows: dict[int, dict[Simplex, int]], chosen: dict[int, Simplex]) -> bool:
        nonlocal nodes
        if not rows:
            return True
        nodes += 1
        if nodes > budget:
            return False
        for r in sorted(rows):
            units = sorted(f for f, v in rows[r].items() if abs(v) == 1)
            if not units:
                continue
            for facet in units:
                pivot = rows[r]
                reduced: dict[int, dict[Simplex, int]] = {}
                for s, row in rows.items():
                    if s == r:
                        continue
                    factor = row.get(facet, 0) * pivot[facet]
                    if factor:
                        row = dict(row)
                        for f, v in pivot.items():
                            value = row.get(f, 0) - factor * v
                            if value:
                                row[f] = value
                            else:
                                row.pop(f, None)
                    reduced[s] = row
                # a row reduced to zero is dependent on the chosen pivots
                if any(not row for row in reduced.values()):
                    continue
                chosen[r] = facet
                if search(reduced, chosen):
                    return True
                del chosen[r]
                if nodes > budget:
                    return False
            return False
        return False

    chosen: dict[int, Simplex] = {}
    start = {i: dict(cycle.terms) for i, cycle in enumerate(cycles)}
    if search(start, chosen):
        return [chosen[i] for i in range(len(cycles))]
    logger.debug("certificate search exhausted", extra={"extra_fields": {"nodes": nodes}})
    return None


def choose_certificate_facets(
    cycles: Sequence[ChainVector], budget: int | None = None
) -> tuple[list[Simplex], str]:
    """Pick one facet per cycle; returns the facets and the method that found them.

    The method is ``greedy``, ``search``, or ``failed`` when neither found a
    unimodular choice (the greedy choice, or an empty list, is returned then).
    """
    greedy = _greedy_facets(cycles)
    if greedy is not None:
        matrix = [[cycle.coefficient(f) for f in greedy] for cycle in cycles]
        if integer_determinant(matrix) in (1, -1):
            return greedy, "greedy"
    logger.debug("greedy facets not unimodular", extra={"extra_fields": {"cycles": len(cycles)}})
    found = _pivot_search(cycles, config.CERT_SEARCH_BUDGET if budget is None else budget)
    if found is not None:
        return found, "search"
    return greedy or [], "failed"


def spans_kernel(cycles: Sequence[ChainVector], c: SimplicialComplex) -> bool:
    """True when the ℤ-span of the cycles is all of ker ∂_top."""
    _require_cycles(cycles)
    faces = c.face_index(c.dim)
    rows = [{faces[simplex]: v for simplex, v in cycle.terms.items()} for cycle in cycles]
    snf = smith_normal_form(IntMatrix(len(rows), len(faces), rows))
    return snf.rank == top_cycle_rank(c) and snf.unimodular


def verify_unimodular_spanning(cycles: Sequence[ChainVector], c: SimplicialComplex) -> bool:
    _require_cycles(cycles)
    if len(cycles) != top_cycle_rank(c):
        return False
    return spans_kernel(cycles, c)


def inject_sign_flip(cycle: ChainVector) -> ChainVector:
    """Copy of ``cycle`` with the sign of its leading term reversed."""
    terms = dict(cycle.terms)
    leading = cycle.leading()
    terms[leading] = -terms[leading]
    return ChainVector(cycle.dimension, terms)
