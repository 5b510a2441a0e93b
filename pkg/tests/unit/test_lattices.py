"""
Partition and signed-partition lattice tests.
"""

import random
from itertools import combinations, product

import pytest
from pydantic import ValidationError

from splitbasis.lattices import (
    Family,
    InvalidParameters,
    LatticeFamily,
    SetPartition,
    SignedElement,
    SignedPartition,
    apply_permutation,
    build_family_lattice,
    check_parameters,
    element_codimension,
    leq_refinement,
    leq_signed,
    parse_set_partition,
    parse_signed_partition,
    partition_to_subspace,
    rank_mismatches,
    set_partitions,
    signed_partitions,
)
from splitbasis.poset import moebius


def lattice(family: str, n: int, T=()):
    return build_family_lattice(LatticeFamily(family=family, n=n, T=T))


# =============================================================================
# Partitions
# =============================================================================


class TestSetPartitions:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_bell_numbers(self, n, count):
        assert sum(1 for _ in set_partitions(n)) == count

    def test_text_round_trip(self):
        p = parse_set_partition("3 1 | 4 2")
        assert str(p) == "1 3 | 2 4"
        assert p.rank == 2
        assert p.block_of(4) == (2, 4)

    def test_not_a_partition(self):
        with pytest.raises(ValidationError):
            SetPartition(n=3, blocks=[[1, 2], [2, 3]])
        with pytest.raises(ValidationError):
            SetPartition(n=3, blocks=[[1], [2]])

    def test_refinement(self):
        finest = parse_set_partition("1 | 2 | 3")
        assert leq_refinement(finest, parse_set_partition("1 2 | 3"))
        assert not leq_refinement(parse_set_partition("1 3 | 2"), parse_set_partition("1 2 | 3"))

    def test_relabel(self):
        p = apply_permutation(parse_set_partition("1 2 | 3 | 4"), {1: 3, 3: 1})
        assert str(p) == "1 | 2 3 | 4"


class TestSignedPartitions:
    @pytest.mark.parametrize("n,count", [(1, 2), (2, 6), (3, 24), (4, 116)])
    def test_dowling_numbers(self, n, count):
        assert sum(1 for _ in signed_partitions(n)) == count

    def test_text_round_trip(self):
        text = "0 5 7 | 1 2' 9 | 3 4' 6' 8"
        p = parse_signed_partition(text)
        assert p.n == 9
        assert str(p) == text
        assert p.rank == 7

    def test_block_minimum_is_unbarred(self):
        p = SignedPartition(n=2, zero_block=[], signed_blocks=[[(1, -1), (2, 1)]])
        assert str(p) == "0 | 1 2'"
        assert p == parse_signed_partition("0 | 1' 2")

    def test_element_parsing(self):
        assert SignedElement.parse("2'") == SignedElement(2, -1)
        assert str(SignedElement(3)) == "3"

    def test_zero_block_required(self):
        with pytest.raises(ValueError):
            parse_signed_partition("1 | 2")

    @pytest.mark.parametrize(
        "lower,upper,expected",
        [
            ("0 | 1 | 2", "0 | 1 2", True),
            ("0 | 1 2'", "0 1 2", True),
            ("0 | 1 2", "0 | 1 2'", False),
            ("0 1 | 2", "0 | 1 2", False),
            ("0 | 1 2'", "0 | 1' 2", True),
        ],
    )
    def test_order(self, lower, upper, expected):
        assert leq_signed(parse_signed_partition(lower), parse_signed_partition(upper)) is expected

    def test_sign_reflection(self):
        p = parse_signed_partition("0 | 1 2 | 3")
        assert str(p.apply_sign(2)) == "0 | 1 2' | 3"


class TestSignedOrder:
    """The raw comparison, before the poset closes it transitively."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_partial_order_exhaustive(self, n):
        elements = list(signed_partitions(n))
        for p in elements:
            assert leq_signed(p, p)
        for p, q in product(elements, repeat=2):
            if p != q and leq_signed(p, q):
                assert not leq_signed(q, p), (str(p), str(q))
        for p, q, r in product(elements, repeat=3):
            if leq_signed(p, q) and leq_signed(q, r):
                assert leq_signed(p, r), (str(p), str(q), str(r))

    def test_transitive_on_sampled_chains(self):
        elements = list(signed_partitions(4))
        rng = random.Random(20)
        above = {str(p): [q for q in elements if leq_signed(p, q)] for p in elements}
        for _ in range(3000):
            p = rng.choice(elements)
            q = rng.choice(above[str(p)])
            r = rng.choice(above[str(q)])
            assert leq_signed(p, r), (str(p), str(q), str(r))

    def test_antisymmetric_on_sampled_pairs(self):
        elements = list(signed_partitions(4))
        rng = random.Random(4)
        for _ in range(3000):
            p, q = rng.sample(elements, 2)
            assert not (leq_signed(p, q) and leq_signed(q, p)), (str(p), str(q))

    @pytest.mark.parametrize("n", [2, 3])
    def test_order_is_reverse_inclusion_of_subspaces(self, n):
        elements = list(signed_partitions(n))
        flats = {str(p): partition_to_subspace(p, "B") for p in elements}
        for p, q in product(elements, repeat=2):
            assert leq_signed(p, q) == flats[str(q)].within(flats[str(p)]), (str(p), str(q))


# =============================================================================
# Subspaces
# =============================================================================


class TestSubspaces:
    def test_type_a(self):
        flat = partition_to_subspace(parse_set_partition("1 2 | 3 | 4"))
        assert flat.dim == 2
        assert element_codimension(parse_set_partition("1 2 | 3 | 4")) == 1

    def test_type_b(self):
        p = parse_signed_partition("0 1 | 2 3'")
        assert partition_to_subspace(p).dim == 1
        assert element_codimension(p) == 2

    def test_family_mismatch(self):
        with pytest.raises(ValueError):
            partition_to_subspace(parse_set_partition("1 | 2"), "B")
        with pytest.raises(ValueError):
            partition_to_subspace(parse_signed_partition("0 | 1 | 2"), "A")


# =============================================================================
# Lattices
# =============================================================================


class TestLatticeFamilies:
    @pytest.mark.parametrize(
        "family,n,T,size,mu",
        [
            ("A", 4, (), 15, -6),
            ("B", 3, (), 24, -15),
            ("D", 3, (), 15, -6),
            ("DB", 3, (1, 3), 21, None),
            ("AT", 4, (1, 2), 13, None),
        ],
    )
    def test_size_and_moebius(self, family, n, T, size, mu):
        lat = lattice(family, n, T)
        assert len(lat) == size
        assert lat.is_graded()
        if mu is not None:
            assert moebius(lat, lat.bottom, lat.top) == mu

    def test_type_at_moebius(self):
        lat = lattice("AT", 4, (1, 2))
        assert abs(moebius(lat, lat.bottom, lat.top)) == 4

    def test_signed_lattice_is_a_lattice(self, pib3):
        assert pib3.is_lattice()
        assert pib3.bottom == "0 | 1 | 2 | 3"
        assert pib3.top == "0 1 2 3"

    @pytest.mark.parametrize(
        "family,n,T", [("A", 4, ()), ("B", 3, ()), ("D", 3, ()), ("DB", 3, (2,))]
    )
    def test_rank_is_codimension(self, family, n, T):
        assert rank_mismatches(lattice(family, n, T)) == []

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_interpolation_is_monotone_in_T(self, n):
        subsets = [T for k in range(n + 1) for T in combinations(range(1, n + 1), k)]
        for T, bigger in product(subsets, repeat=2):
            if not set(T) <= set(bigger):
                continue
            small, large = lattice("DB", n, T), lattice("DB", n, bigger)
            assert set(small) <= set(large), (T, bigger)
            for x, y in product(small, repeat=2):
                assert small.leq(x, y) == large.leq(x, y)

    @pytest.mark.parametrize("n", [2, 3])
    def test_interpolation_endpoints(self, n):
        assert set(lattice("DB", n)) == set(lattice("D", n))
        assert set(lattice("DB", n, range(1, n + 1))) == set(lattice("B", n))

    def test_memoized(self):
        assert lattice("A", 3) is lattice("A", 3)

    def test_instance_id(self):
        assert LatticeFamily(family="DB", n=3, T=[3, 1]).instance_id == "DB-3-T{1,3}"
        assert LatticeFamily(family=Family.A, n=4).instance_id == "A-4"


class TestMoebiusRecursion:
    @pytest.mark.parametrize(
        "family,n,T",
        [
            ("A", 3, ()),
            ("A", 4, ()),
            ("B", 2, ()),
            ("B", 3, ()),
            ("B", 4, ()),
            ("D", 3, ()),
            ("D", 4, ()),
            *[("DB", 3, T) for k in range(4) for T in combinations((1, 2, 3), k)],
            ("DB", 4, (1, 3)),
            *[("AT", 4, T) for k in range(1, 4) for T in combinations((1, 2, 3), k)],
        ],
    )
    def test_sums_vanish_on_every_interval(self, family, n, T):
        lat = lattice(family, n, T)
        for x, y in product(lat, repeat=2):
            if x == y or not lat.leq(x, y):
                continue
            interval = [z for z in lat if lat.leq(x, z) and lat.leq(z, y)]
            assert sum(moebius(lat, x, z) for z in interval) == 0, (x, y)
            # the dual recursion is not how the table is filled
            assert sum(moebius(lat, z, y) for z in interval) == 0, (x, y)


class TestParameters:
    @pytest.mark.parametrize(
        "family,n,T",
        [
            ("D", 1, ()),
            ("A", 0, ()),
            ("A", 3, (1,)),
            ("DB", 3, (4,)),
            ("AT", 4, ()),
            ("AT", 4, (4,)),
        ],
    )
    def test_rejected(self, family, n, T):
        with pytest.raises(InvalidParameters):
            check_parameters(family, n, T)

    def test_model_wraps_error(self):
        with pytest.raises(ValidationError):
            LatticeFamily(family="AT", n=4, T=[])

    def test_unknown_family(self):
        with pytest.raises(ValidationError):
            LatticeFamily(family="E", n=6)
