"""
Partition lattices of types A, B and D and the subposets Π_n^DB(T), Π_n(T).

Elements are labelled by their canonical text form; each lattice's payload
maps labels back to ``SetPartition`` or ``SignedPartition`` values.
"""

from splitbasis.lattices.builders import (
    Family,
    InvalidParameters,
    LatticeError,
    LatticeFamily,
    apply_permutation,
    build_family_lattice,
    build_Pi,
    build_PiAT,
    build_PiB,
    build_PiD,
    build_PiDB,
    check_parameters,
    element_codimension,
    rank_mismatches,
)
from splitbasis.lattices.partitions import (
    SetPartition,
    SignedBlock,
    SignedElement,
    SignedPartition,
    bar_block,
    canonical_block,
    leq_refinement,
    leq_signed,
    parse_set_partition,
    parse_signed_partition,
    partition_to_subspace,
    set_partitions,
    signed_partitions,
    unbar_block,
)

__all__ = [
    "Family",
    "InvalidParameters",
    "LatticeError",
    "LatticeFamily",
    "SetPartition",
    "SignedBlock",
    "SignedElement",
    "SignedPartition",
    "apply_permutation",
    "bar_block",
    "build_Pi",
    "build_PiAT",
    "build_PiB",
    "build_PiD",
    "build_PiDB",
    "build_family_lattice",
    "canonical_block",
    "check_parameters",
    "element_codimension",
    "leq_refinement",
    "leq_signed",
    "parse_set_partition",
    "parse_signed_partition",
    "partition_to_subspace",
    "rank_mismatches",
    "set_partitions",
    "signed_partitions",
    "unbar_block",
]
