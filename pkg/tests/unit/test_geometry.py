"""
Arrangement geometry: hyperplanes, intersection lattices, regions, bounded
slices, the z-map and the geometric basis check.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from splitbasis.geometry import (
    GenericityViolated,
    GeometryError,
    Hyperplane,
    all_regions,
    bounded_regions,
    bounded_slice_test,
    coxeter_arrangement,
    default_vector,
    flat_isomorphism,
    intersection_lattice,
    is_generic,
    is_generic_on_lines,
    region_divides,
    region_for,
    regions_report,
    slice_lattice,
    verify_theorem_T2,
    z_map_region,
    zaslavsky_check,
)
from splitbasis.poset import boolean_atoms, moebius
from splitbasis.splitting import SignedPermutation

parse = SignedPermutation.parse


# =============================================================================
# Hyperplanes and arrangements
# =============================================================================


class TestHyperplane:
    def test_normal_is_primitive_and_positive(self):
        h = Hyperplane(normal=[-2, 4, 0])
        assert h.normal == (1, -2, 0)
        assert h.offset == Fraction(0)
        assert h.label == "x1 - 2x2 = 0"

    def test_zero_normal(self):
        with pytest.raises(ValidationError):
            Hyperplane(normal=[0, 0])


class TestArrangements:
    @pytest.mark.parametrize(
        "family,n,T,count",
        [
            ("A", 4, (), 6),
            ("B", 3, (), 9),
            ("D", 3, (), 6),
            ("DB", 3, (1,), 7),
            ("AT", 4, (1, 2), 5),
        ],
    )
    def test_hyperplane_counts(self, family, n, T, count):
        a = coxeter_arrangement(family, n, T)
        assert len(a) == count
        assert a.central

    @pytest.mark.parametrize("family,n,size", [("A", 4, 15), ("B", 3, 24), ("D", 3, 15)])
    def test_intersection_lattice_size(self, family, n, size):
        lattice = intersection_lattice(coxeter_arrangement(family, n))
        assert len(lattice) == size
        assert lattice.is_graded()

    def test_braid_arrangement_is_essential_in_its_ambient(self):
        a = coxeter_arrangement("A", 4)
        assert a.ambient.dim == 3
        assert a.essential
        assert a.rank == 3

    def test_moebius_matches_partition_lattice(self):
        lattice = intersection_lattice(coxeter_arrangement("B", 3))
        assert moebius(lattice, lattice.bottom, lattice.top) == -15


class TestGenericity:
    def test_default_vectors(self):
        assert default_vector("A", 4) == (-1, -1, -1, 3)
        assert default_vector("B", 3) == (1, 2, 4)
        assert default_vector("DB", 3) == (1, 2, 4)
        assert default_vector("AT", 4) is None

    @pytest.mark.parametrize("family,n", [("A", 4), ("B", 3), ("D", 3), ("DB", 3)])
    def test_default_vector_is_generic(self, family, n):
        assert is_generic(coxeter_arrangement(family, n), default_vector(family, n))

    def test_coordinate_line_in_orthogonal_plane(self):
        a = coxeter_arrangement("B", 3)
        assert not is_generic(a, (1, 1, 0))
        assert not is_generic_on_lines(a, (1, 1, 0))
        assert not is_generic(a, (0, 0, 0))


# =============================================================================
# Regions
# =============================================================================


class TestRegions:
    def test_rays_of_type_b_region(self):
        region = region_for(parse("1 2 3"), "B")
        assert set(region.rays) == {(0, 0, 1), (0, 1, 1), (1, 1, 1)}
        assert region.contains(region.interior_point())

    def test_type_d_label(self):
        assert region_for(parse("1 2 3"), "D").label == "~1 2 3"

    @pytest.mark.parametrize(
        "family,n,v,bounded,total",
        [
            ("A", 3, None, 2, 6),
            ("A", 4, None, 6, 24),
            ("B", 3, None, 15, 48),
            ("D", 3, (1, 2, 4), 6, 24),
        ],
    )
    def test_bounded_counts(self, family, n, v, bounded, total):
        assert len(bounded_regions(family, n, v=v)) == bounded
        assert sum(1 for _ in all_regions(family, n)) == total

    def test_type_a_bounded_regions_end_in_n(self):
        assert {r.perm.omega[-1] for r in bounded_regions("A", 4)} == {4}

    def test_ray_on_slice_hyperplane(self):
        region = region_for(parse("1 2 3"), "B")
        with pytest.raises(GenericityViolated):
            bounded_slice_test(region, (1, -1, 0))

    def test_type_d_region_is_divided(self):
        assert region_divides(region_for(parse("2 1' 3"), "D"))
        with pytest.raises(GeometryError):
            region_divides(region_for(parse("1 2 3"), "B"))

    def test_type_at_not_enumerated(self):
        with pytest.raises(GeometryError):
            list(all_regions("AT", 4, (1,)))


# =============================================================================
# Slices and the z-map
# =============================================================================


class TestSlices:
    def test_slice_of_b2(self):
        poset, bottom = slice_lattice(coxeter_arrangement("B", 2), (1, 2))
        assert len(poset) == 5
        assert bottom in poset

    def test_zaslavsky(self):
        a = coxeter_arrangement("A", 4)
        report = zaslavsky_check(a, default_vector("A", 4), all_regions("A", 4))
        assert report.passed
        assert report.bounded_regions == 6

    def test_z_map_is_boolean(self):
        a = coxeter_arrangement("A", 4)
        region = bounded_regions("A", 4)[0]
        z = z_map_region(region, a)
        assert len(z) == 8
        atoms, _ = boolean_atoms(z)
        assert len(atoms) == 3

    @pytest.mark.parametrize("family,n,T", [("A", 4, ()), ("B", 2, ()), ("DB", 3, (2,))])
    def test_flat_isomorphism(self, family, n, T):
        gamma, detail = flat_isomorphism(family, n, T)
        assert gamma is not None, detail
        assert len(set(gamma.values())) == len(gamma)


# =============================================================================
# Reports
# =============================================================================


class TestGeometricReports:
    def test_regions_report(self):
        report = regions_report("A", 3)
        assert report.passed, report.failures()
        assert report.bounded_count == 2
        assert report.total_count == 6
        assert report.vector == ["-1", "-1", "2"]
        assert all(row.witness for row in report.regions if row.bounded)

    def test_regions_report_type_d(self):
        report = regions_report("D", 3, v=(1, 2, 4))
        assert report.passed, report.failures()
        assert any(c.name == "walls_divide" for c in report.checks)

    def test_non_generic_vector_stops_early(self):
        report = regions_report("B", 3, v=(1, 1, 0))
        assert not report.passed
        assert report.regions == []

    @pytest.mark.parametrize(
        "family,n,T,v", [("A", 4, (), None), ("D", 3, (), (1, 2, 4)), ("B", 2, (), None)]
    )
    def test_geometric_basis(self, family, n, T, v):
        report = verify_theorem_T2(family, n, T, v)
        assert report.passed, report.failures()

    def test_no_vector_for_type_at(self):
        with pytest.raises(GeometryError):
            verify_theorem_T2("AT", 4, (1,))
