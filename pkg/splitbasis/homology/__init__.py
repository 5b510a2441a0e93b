"""
Integer homology of simplicial complexes.

Chains, boundary maps, Smith normal form, reduced Betti numbers,
fundamental cycles of spheres and basis certificates.
"""

from splitbasis.homology.certificate import (
    choose_certificate_facets,
    inject_sign_flip,
    spans_kernel,
    verify_basis_certificate,
    verify_unimodular_spanning,
)
from splitbasis.homology.complex import (
    ChainVector,
    FaceNotInComplex,
    HomologyError,
    NotACycle,
    RankNotOne,
    Simplex,
    SimplicialComplex,
    SizeMismatch,
    boundary,
    is_cycle,
)
from splitbasis.homology.cycles import (
    boolean_cycle_formula,
    boundary_matrix,
    embedded_subcomplex,
    fundamental_cycle_top,
    homology_profile,
    kernel_cross_check,
    reduced_betti,
    top_cycle_rank,
)
from splitbasis.homology.snf import (
    IntMatrix,
    SnfResult,
    integer_determinant,
    integer_rank,
    smith_normal_form,
)

__all__ = [
    "ChainVector",
    "FaceNotInComplex",
    "HomologyError",
    "IntMatrix",
    "NotACycle",
    "RankNotOne",
    "Simplex",
    "SimplicialComplex",
    "SizeMismatch",
    "SnfResult",
    "boolean_cycle_formula",
    "boundary",
    "boundary_matrix",
    "choose_certificate_facets",
    "embedded_subcomplex",
    "fundamental_cycle_top",
    "homology_profile",
    "inject_sign_flip",
    "integer_determinant",
    "integer_rank",
    "is_cycle",
    "kernel_cross_check",
    "reduced_betti",
    "smith_normal_form",
    "spans_kernel",
    "top_cycle_rank",
    "verify_basis_certificate",
    "verify_unimodular_spanning",
]
