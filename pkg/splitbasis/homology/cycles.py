"""Boundary matrices, reduced Betti numbers and fundamental cycles."""

from __future__ import annotations

from itertools import permutations
from math import gcd, lcm

from sympy import Matrix

from splitbasis.homology.complex import (
    ChainVector,
    FaceNotInComplex,
    HomologyError,
    RankNotOne,
    SimplicialComplex,
)
from splitbasis.homology.snf import IntMatrix, SnfResult, smith_normal_form
from splitbasis.observe import get_logger
from splitbasis.poset import Poset, boolean_atoms, maximal_chains

logger = get_logger("homology")


def boundary_matrix(c: SimplicialComplex, k: int, augmented: bool = True) -> IntMatrix:
    """∂_k with one row per k-face and one column per (k-1)-face.

    For k = 0 the single column is the augmentation (the empty face) when
    ``augmented`` is set, otherwise the matrix has no columns.
    """
    rows_faces = c.faces(k)
    if k == 0:
        cols_faces = [()] if augmented else []
        rows = [{0: 1} if augmented else {} for _ in rows_faces]
        return IntMatrix(len(rows_faces), len(cols_faces), rows, rows_faces, cols_faces)
    cols_faces = c.faces(k - 1)
    col_index = c.face_index(k - 1)
    rows = []
    for simplex in rows_faces:
        row = {}
        for i in range(len(simplex)):
            row[col_index[simplex[:i] + simplex[i + 1 :]]] = (-1) ** i
        rows.append(row)
    return IntMatrix(len(rows_faces), len(cols_faces), rows, rows_faces, cols_faces)


def boundary_snf(c: SimplicialComplex, k: int) -> SnfResult:
    """Smith form of the augmented ∂_k, cached on the complex; zero map outside 0..dim."""
    if k not in c._boundary_ranks:
        if k < 0 or k > c.dim:
            c._boundary_ranks[k] = SnfResult((), 0, (0, 0))
        else:
            c._boundary_ranks[k] = smith_normal_form(boundary_matrix(c, k))
    return c._boundary_ranks[k]


def reduced_betti(c: SimplicialComplex, k: int) -> tuple[int, list[int]]:
    if not 0 <= k <= c.dim:
        raise HomologyError(f"degree {k} outside 0..{c.dim}")
    kernel = len(c.faces(k)) - boundary_snf(c, k).rank
    above = boundary_snf(c, k + 1)
    return kernel - above.rank, above.torsion


def homology_profile(c: SimplicialComplex) -> list[tuple[int, int, list[int]]]:
    return [(k, *reduced_betti(c, k)) for k in range(c.dim + 1)]


def top_cycle_rank(c: SimplicialComplex) -> int:
    """Rank of ker ∂_top, which is the top reduced Betti number."""
    return len(c.faces(c.dim)) - boundary_snf(c, c.dim).rank


def fundamental_cycle_top(c: SimplicialComplex) -> ChainVector:
    top = c.dim
    faces = c.faces(top)
    dense = boundary_matrix(c, top).transpose().to_dense()
    kernel = Matrix(dense).nullspace() if faces else []
    if len(kernel) != 1:
        raise RankNotOne(len(kernel))
    vector = kernel[0]
    scale = lcm(*(int(x.q) for x in vector))
    values = [int(x * scale) for x in vector]
    common = gcd(*values)
    chain = ChainVector(top, {face: v // common for face, v in zip(faces, values)})
    return chain.normalized()


def _permutation_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def boolean_cycle_formula(b: Poset, ambient: SimplicialComplex) -> ChainVector:
    """Fundamental cycle of the proper part of a Boolean lattice, as a chain of ``ambient``.

    Sum over orderings σ of the atoms of sgn(σ) times the chain of partial
    joins a_σ(1) < a_σ(1)∨a_σ(2) < ... below the top.
    """
    atoms, joins = boolean_atoms(b)
    m = len(atoms)
    terms: dict[tuple[str, ...], int] = {}
    for perm in permutations(range(1, m + 1)):
        chain = [joins[frozenset(perm[:k])] for k in range(1, m)]
        face, sign = ambient.oriented(chain)
        if chain and not ambient.contains(face):
            raise FaceNotInComplex(face)
        terms[face] = terms.get(face, 0) + _permutation_sign(perm) * sign
    return ChainVector(m - 2, terms).normalized()


def boolean_proper_part(b: Poset) -> Poset:
    bottom, top = b.minimal_elements(), b.maximal_elements()
    return b.induced(x for x in b.elements if x not in (*bottom, *top))


def embedded_subcomplex(b: Poset, ambient: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the proper part of ``b`` as a subcomplex of ``ambient``."""
    return ambient.subcomplex(maximal_chains(boolean_proper_part(b)))


def kernel_cross_check(b: Poset, ambient: SimplicialComplex) -> bool:
    """True when the Boolean formula and the kernel generator agree up to sign."""
    formula = boolean_cycle_formula(b, ambient)
    generator = fundamental_cycle_top(embedded_subcomplex(b, ambient))
    agrees = formula == generator or formula == -generator
    if not agrees:
        logger.debug("kernel cross-check mismatch", extra={"extra_fields": {"size": len(b)}})
    return agrees
