"""
Splitting subposets, their fundamental cycles and the bases they form.
"""

from splitbasis.splitting.action import (
    ActionResult,
    act,
    basis_cycle,
    inverse,
    orbit_report,
    relabel_chain,
    young_generators,
    young_subgroup,
)
from splitbasis.splitting.bases import (
    MIN_BASIS_N,
    BasisIndex,
    IndexSelector,
    basis_index_set,
    certify_cycles,
    expected_basis_size,
    folkman_checks,
    verify_splitting_basis,
)
from splitbasis.splitting.permutations import (
    SignedPermutation,
    SplitPositions,
    all_permutations,
    all_signed_permutations,
    left_to_right_maxima,
    maxima_unbarred,
    right_to_left_maxima,
    split_permutation,
    split_signed,
)
from splitbasis.splitting.subposets import (
    ambient_complex,
    rho_cycle,
    splitting_subposet,
    splitting_subposet_A,
    splitting_subposet_B,
    splitting_subposet_D,
)

__all__ = [
    "MIN_BASIS_N",
    "ActionResult",
    "BasisIndex",
    "IndexSelector",
    "SignedPermutation",
    "SplitPositions",
    "act",
    "all_permutations",
    "all_signed_permutations",
    "ambient_complex",
    "basis_cycle",
    "basis_index_set",
    "certify_cycles",
    "expected_basis_size",
    "folkman_checks",
    "inverse",
    "left_to_right_maxima",
    "maxima_unbarred",
    "orbit_report",
    "relabel_chain",
    "rho_cycle",
    "right_to_left_maxima",
    "split_permutation",
    "split_signed",
    "splitting_subposet",
    "splitting_subposet_A",
    "splitting_subposet_B",
    "splitting_subposet_D",
    "verify_splitting_basis",
    "young_generators",
    "young_subgroup",
]
