"""
Desk-scale reproduction of the basis, region and orbit counts.

Every expectation here is exact: basis sizes match closed forms, determinants
are ±1 and bounded-region sets equal their predicates. Rows measured in
minutes carry the ``slow`` marker and run with ``pytest -m slow``.
"""

from itertools import combinations
from math import comb

import pytest

from splitbasis.geometry import regions_report, verify_theorem_T2
from splitbasis.splitting import orbit_report, verify_splitting_basis
from splitbasis.workbench import load_suite, run_suite


def nonempty_subsets(values):
    return [c for k in range(1, len(values) + 1) for c in combinations(values, k)]


def check(report, name: str) -> bool:
    return next(c.passed for c in report.checks if c.name == name)


def assert_basis(report, size: int) -> None:
    assert report.passed, report.failures()
    assert report.counts.basis == size
    assert report.counts.rank == size
    assert report.determinant in (1, -1)
    assert check(report, "homology_concentrated")
    assert check(report, "coefficient_certificate") == check(report, "unimodular_spanning")


# =============================================================================
# Splitting bases per family
# =============================================================================


class TestTypeA:
    @pytest.mark.parametrize("n,size", [(3, 2), (4, 6), (5, 24)])
    def test_basis(self, n, size):
        assert_basis(verify_splitting_basis("A", n), size)


class TestTypeB:
    @pytest.mark.parametrize("n,size", [(2, 3), (3, 15)])
    def test_basis(self, n, size):
        assert_basis(verify_splitting_basis("B", n), size)

    @pytest.mark.slow
    def test_basis_n4(self):
        assert_basis(verify_splitting_basis("B", 4), 105)


class TestTypeD:
    def test_basis_n3(self):
        assert_basis(verify_splitting_basis("D", 3), 6)

    @pytest.mark.slow
    def test_basis_n4(self):
        assert_basis(verify_splitting_basis("D", 4), 45)


class TestInterpolatingDB:
    @pytest.mark.parametrize("T", [(), *nonempty_subsets((1, 2, 3))])
    def test_basis(self, T):
        assert_basis(verify_splitting_basis("DB", 3, T), (len(T) + 2) * 3)


class TestTypeAT:
    @pytest.mark.parametrize("T", nonempty_subsets((1, 2, 3)))
    def test_basis_n4(self, T):
        assert_basis(verify_splitting_basis("AT", 4, T), 2 * len(T))

    @pytest.mark.parametrize("T", nonempty_subsets((1, 2, 3, 4)))
    def test_basis_n5(self, T):
        assert_basis(verify_splitting_basis("AT", 5, T), 6 * len(T))


# =============================================================================
# Geometry
# =============================================================================


GEOMETRIC = [
    ("A", 3, (), None),
    ("A", 4, (), None),
    ("A", 5, (), None),
    ("B", 2, (), None),
    ("B", 3, (), None),
    ("D", 3, (), (1, 2, 4)),
    *[("DB", 3, T, None) for T in [(), *nonempty_subsets((1, 2, 3))]],
]


class TestGeometricAgreement:
    @pytest.mark.parametrize("family,n,T,v", GEOMETRIC)
    def test_bounded_regions_and_zaslavsky(self, family, n, T, v):
        report = regions_report(family, n, T, v)
        assert report.passed, report.failures()
        assert check(report, "bounded_equals_predicate")
        z = report.zaslavsky
        assert z.bounded_regions == z.slice_mobius_sum == z.top_mobius

    @pytest.mark.parametrize("family,n,T,v", GEOMETRIC)
    def test_geometric_cycles_match_splitting(self, family, n, T, v):
        report = verify_theorem_T2(family, n, T, v)
        assert report.passed, report.failures()
        assert check(report, "matches_splitting_cycles")


# =============================================================================
# Orbits and cross-checks
# =============================================================================


ORBIT_CASES = [(4, T) for T in nonempty_subsets((1, 2, 3))] + [
    (5, T) for T in nonempty_subsets((1, 2, 3, 4))
]


class TestOrbits:
    @pytest.mark.parametrize("n,T", ORBIT_CASES)
    def test_regular_orbits(self, n, T):
        report = orbit_report(n, T)
        assert report.passed, report.failures()
        assert len(report.orbits) == comb(n - 2, len(T) - 1)
        assert report.regular


FAST_INSTANCES = [
    ("A", 3, ()),
    ("A", 4, ()),
    ("A", 5, ()),
    ("B", 2, ()),
    ("B", 3, ()),
    ("D", 3, ()),
    *[("DB", 3, T) for T in [(), *nonempty_subsets((1, 2, 3))]],
    *[("AT", 4, T) for T in nonempty_subsets((1, 2, 3))],
    *[("AT", 5, T) for T in nonempty_subsets((1, 2, 3, 4))],
]


class TestCrossChecks:
    @pytest.mark.parametrize("family,n,T", FAST_INSTANCES)
    def test_formula_matches_kernel(self, family, n, T):
        report = verify_splitting_basis(family, n, T, cross_check=True)
        assert check(report, "kernel_cross_check"), report.failures()

    @pytest.mark.parametrize(
        "family,n,T",
        [("A", 4, ()), ("B", 3, ()), ("D", 3, ()), ("DB", 3, (1, 3)), ("AT", 5, (2, 3))],
    )
    def test_every_group_element(self, family, n, T):
        report = verify_splitting_basis(family, n, T, indices="all", cross_check=True)
        assert check(report, "boolean_subposets"), report.failures()
        assert check(report, "kernel_cross_check"), report.failures()
        assert check(report, "spans_kernel")


@pytest.mark.slow
def test_default_suite_passes():
    report = run_suite(load_suite(), include_slow=True, timing=False)
    assert report.passed, [row.instance for row in report.rows if not row.passed]
