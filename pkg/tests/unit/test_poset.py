"""
Poset core tests: relations, covers, Möbius function, Boolean recognition.
"""

import pytest

from splitbasis.poset import (
    BoundedPoset,
    NotBoolean,
    NotComparable,
    Poset,
    PosetError,
    adjoin_bounds,
    boolean_atoms,
    boolean_lattice,
    chain_poset,
    closed_interval,
    induced_subposet,
    maximal_chains,
    moebius,
    order_complex,
    proper_part,
)

# =============================================================================
# Fixtures
# =============================================================================


@pytest.fixture
def divisors_of_12() -> BoundedPoset:
    labels = [str(d) for d in (1, 2, 3, 4, 6, 12)]
    poset = Poset.from_relation(labels, lambda x, y: int(y) % int(x) == 0)
    return BoundedPoset.of(poset)


@pytest.fixture
def antichain_with_bounds() -> BoundedPoset:
    return adjoin_bounds(Poset(["a", "b"]))


# =============================================================================
# Construction
# =============================================================================


class TestConstruction:
    def test_relations_are_closed_transitively(self):
        p = Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert p.leq("a", "c")
        assert not p.leq("c", "a")
        assert p.lt("a", "b")
        assert not p.lt("a", "a")

    def test_covers_are_the_transitive_reduction(self):
        p = Poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        assert sorted(p.covers) == [("a", "b"), ("b", "c")]
        assert sorted(p.covers) == p.transitive_reduction()

    def test_cycle_rejected(self):
        with pytest.raises(PosetError):
            Poset(["a", "b"], [("a", "b"), ("b", "a")])

    def test_unknown_label(self):
        p = chain_poset(2)
        with pytest.raises(PosetError):
            p.leq("c000", "zzz")

    def test_from_relation_matches_divisibility(self, divisors_of_12):
        assert divisors_of_12.bottom == "1"
        assert divisors_of_12.top == "12"
        assert sorted(divisors_of_12.upper_covers("2")) == ["4", "6"]
        assert divisors_of_12.rank("12") == 3

    def test_unbounded_poset_rejected(self):
        with pytest.raises(PosetError):
            BoundedPoset.of(Poset(["a", "b"]))

    def test_adjoin_bounds(self, antichain_with_bounds):
        assert len(antichain_with_bounds) == 4
        assert antichain_with_bounds.leq(antichain_with_bounds.bottom, "a")
        assert antichain_with_bounds.leq("b", antichain_with_bounds.top)

    def test_payload_survives_induction(self):
        p = Poset(["x", "y", "z"], [("x", "y")], payload={"x": 1, "y": 2, "z": 3})
        q = induced_subposet(p, ["x", "y"])
        assert q.payload == {"x": 1, "y": 2}
        assert q.leq("x", "y")


# =============================================================================
# Ranks and lattice structure
# =============================================================================


class TestStructure:
    def test_boolean_lattice_is_graded_lattice(self):
        b = boolean_lattice(3)
        assert len(b) == 8
        assert b.is_graded()
        assert b.is_lattice()
        assert b.rank(b.top) == 3
        assert b.join("{1}", "{2}") == "{1,2}"
        assert b.meet("{1,2}", "{2,3}") == "{2}"

    def test_canonical_order_is_linear_extension(self, divisors_of_12):
        order = divisors_of_12.canonical_order()
        position = {x: i for i, x in enumerate(order)}
        for x, y in divisors_of_12.covers:
            assert position[x] < position[y]

    def test_bowtie_is_not_a_lattice(self):
        p = Poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
        assert p.join("a", "b") is None
        assert not p.is_lattice()

    def test_closed_interval(self, divisors_of_12):
        interval = closed_interval(divisors_of_12, "2", "12")
        assert sorted(interval.elements) == ["12", "2", "4", "6"]
        with pytest.raises(NotComparable):
            closed_interval(divisors_of_12, "4", "6")

    def test_maximal_chains_of_chain(self):
        assert maximal_chains(chain_poset(3)) == [("c000", "c001", "c002")]


# =============================================================================
# Möbius function
# =============================================================================


class TestMoebius:
    def test_boolean_lattice(self):
        for m in range(1, 5):
            b = boolean_lattice(m)
            assert moebius(b, b.bottom, b.top) == (-1) ** m

    def test_number_theoretic(self, divisors_of_12):
        # μ(12) = 0, μ(6) = 1, μ(2) = -1
        assert moebius(divisors_of_12, "1", "12") == 0
        assert moebius(divisors_of_12, "1", "6") == 1
        assert moebius(divisors_of_12, "1", "2") == -1
        assert moebius(divisors_of_12, "2", "12") == 1

    def test_two_atoms(self, antichain_with_bounds):
        p = antichain_with_bounds
        assert moebius(p, p.bottom, p.top) == 1

    def test_incomparable_raises(self, divisors_of_12):
        with pytest.raises(NotComparable):
            moebius(divisors_of_12, "4", "6")

    def test_partition_lattice(self, pi4):
        assert moebius(pi4, pi4.bottom, pi4.top) == -6


# =============================================================================
# Order complexes and Boolean recognition
# =============================================================================


class TestOrderComplex:
    def test_proper_part_of_boolean_lattice_is_a_hexagon(self):
        c = order_complex(proper_part(boolean_lattice(3)))
        assert len(c.vertices) == 6
        assert len(c.facets) == 6
        assert c.dim == 1

    def test_vertex_order_follows_rank(self, pi4):
        c = order_complex(proper_part(pi4))
        ranks = [pi4.rank(v) for v in c.vertices]
        assert ranks == sorted(ranks)


class TestBooleanRecognition:
    def test_isomorphic_to_relabelled_copy(self, antichain_with_bounds):
        from splitbasis.poset import is_isomorphic

        assert is_isomorphic(boolean_lattice(2), antichain_with_bounds)
        assert not is_isomorphic(boolean_lattice(2), chain_poset(4))

    def test_atoms_and_joins(self):
        atoms, joins = boolean_atoms(boolean_lattice(3))
        assert atoms == ["{1}", "{2}", "{3}"]
        assert joins[frozenset()] == "{}"
        assert joins[frozenset({1, 2})] == "{1,2}"
        assert joins[frozenset({1, 2, 3})] == "{1,2,3}"

    def test_chain_is_not_boolean(self):
        with pytest.raises(NotBoolean):
            boolean_atoms(chain_poset(4))

    def test_diamond_with_three_atoms_is_not_boolean(self):
        p = adjoin_bounds(Poset(["a", "b", "c"]))
        with pytest.raises(NotBoolean):
            boolean_atoms(p)
