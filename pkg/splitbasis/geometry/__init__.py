"""
Exact rational hyperplane arrangements: Coxeter arrangements, intersection
lattices, regions with extreme rays, generic slices and the z-map.
"""

from splitbasis.geometry.arrangement import (
    Arrangement,
    Flat,
    GenericityViolated,
    GeometryError,
    Hyperplane,
    SingularRegion,
    coxeter_arrangement,
    default_vector,
    flat_closure,
    genericity_shortcut_agrees,
    intersection_lattice,
    is_generic,
    is_generic_on_lines,
    require_generic,
)
from splitbasis.geometry.regions import (
    Region,
    all_regions,
    bounded_regions,
    bounded_slice_test,
    chamber_signs,
    predicate_witness,
    region_divides,
    region_for,
)
from splitbasis.geometry.slice import (
    flat_isomorphism,
    slice_lattice,
    z_map_region,
    zaslavsky_check,
)
from splitbasis.geometry.verify import regions_report, verify_theorem_T2

__all__ = [
    "Arrangement",
    "Flat",
    "GenericityViolated",
    "GeometryError",
    "Hyperplane",
    "Region",
    "SingularRegion",
    "all_regions",
    "bounded_regions",
    "bounded_slice_test",
    "chamber_signs",
    "coxeter_arrangement",
    "default_vector",
    "flat_closure",
    "flat_isomorphism",
    "genericity_shortcut_agrees",
    "intersection_lattice",
    "is_generic",
    "is_generic_on_lines",
    "predicate_witness",
    "region_divides",
    "region_for",
    "regions_report",
    "require_generic",
    "slice_lattice",
    "verify_theorem_T2",
    "z_map_region",
    "zaslavsky_check",
]
