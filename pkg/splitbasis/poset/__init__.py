"""
Finite posets over canonical string labels.

A ``Poset`` stores its elements sorted by label and keeps the full order
relation as one up-set bitmask per element, so comparisons are a shift and
a mask. Covers are always the transitive reduction of that relation.
Everything is immutable once built; the only lazily filled state is the
Möbius memo, whose entries are idempotent.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from itertools import combinations
from typing import TYPE_CHECKING, Any

from splitbasis.observe import get_logger

if TYPE_CHECKING:
    from splitbasis.homology.complex import SimplicialComplex

logger = get_logger("poset")

PosetChain = tuple[str, ...]


class PosetError(Exception):
    """Raised for malformed posets or invalid poset queries."""


class NotComparable(PosetError):
    def __init__(self, x: str, y: str):
        self.x = x
        self.y = y
        super().__init__(f"{x!r} is not below {y!r}")


class NotBoolean(PosetError):
    """Raised when a poset expected to be a Boolean lattice is not one."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite partial order on unique string labels."""

    def __init__(
        self,
        elements: Iterable[str],
        relations: Iterable[tuple[str, str]] = (),
        payload: Mapping[str, Any] | None = None,
    ):
        labels = sorted(set(elements))
        self.elements: tuple[str, ...] = tuple(labels)
        self._index = {label: i for i, label in enumerate(labels)}
        up = [1 << i for i in range(len(labels))]
        for lower, upper in relations:
            up[self._index[lower]] |= 1 << self._index[upper]
        self._up = self._close(up)
        self._finish(payload)

    @classmethod
    def from_relation(
        cls,
        elements: Iterable[str],
        leq: Callable[[str, str], bool],
        payload: Mapping[str, Any] | None = None,
    ) -> Poset:
        """Build from a comparison predicate evaluated on every ordered pair."""
        poset = cls.__new__(cls)
        labels = sorted(set(elements))
        poset.elements = tuple(labels)
        poset._index = {label: i for i, label in enumerate(labels)}
        up = []
        for i, x in enumerate(labels):
            mask = 1 << i
            for j, y in enumerate(labels):
                if i != j and leq(x, y):
                    mask |= 1 << j
            up.append(mask)
        poset._up = cls._close(up)
        poset._finish(payload)
        return poset

    @classmethod
    def _from_masks(
        cls, labels: Sequence[str], up: list[int], payload: Mapping[str, Any] | None
    ) -> Poset:
        poset = cls.__new__(cls)
        poset.elements = tuple(labels)
        poset._index = {label: i for i, label in enumerate(labels)}
        poset._up = up
        poset._finish(payload)
        return poset

    @staticmethod
    def _close(up: list[int]) -> list[int]:
        changed = True
        while changed:
            changed = False
            for i, mask in enumerate(up):
                closed = mask
                for j in _bits(mask & ~(1 << i)):
                    closed |= up[j]
                if closed != mask:
                    up[i] = closed
                    changed = True
        return up

    def _finish(self, payload: Mapping[str, Any] | None) -> None:
        size = len(self.elements)
        self._down = [0] * size
        for i, mask in enumerate(self._up):
            for j in _bits(mask):
                self._down[j] |= 1 << i
        for i in range(size):
            for j in _bits(self._up[i] & ~(1 << i)):
                if (self._up[j] >> i) & 1:
                    raise PosetError(
                        f"order is not antisymmetric: {self.elements[i]!r}, {self.elements[j]!r}"
                    )
        self._upper_covers: list[tuple[int, ...]] = []
        for i in range(size):
            strict = self._up[i] & ~(1 << i)
            covers = strict
            for j in _bits(strict):
                covers &= ~(self._up[j] & ~(1 << j))
            self._upper_covers.append(tuple(_bits(covers)))
        lower: list[list[int]] = [[] for _ in range(size)]
        for i, ups in enumerate(self._upper_covers):
            for j in ups:
                lower[j].append(i)
        self._lower_covers = [tuple(items) for items in lower]
        self._height = [0] * size
        for i in self._linear_extension():
            below = self._lower_covers[i]
            self._height[i] = 1 + max(self._height[j] for j in below) if below else 0
        self.payload: dict[str, Any] = dict(payload or {})
        self._mobius: dict[int, dict[int, int]] = {}

    def _linear_extension(self) -> list[int]:
        return sorted(range(len(self.elements)), key=lambda i: (bin(self._down[i]).count("1"), i))

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} elements, {len(self.covers)} covers)"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"unknown element {label!r}") from None

    def leq(self, x: str, y: str) -> bool:
        return bool((self._up[self.index(x)] >> self.index(y)) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    @property
    def covers(self) -> list[tuple[str, str]]:
        return [
            (self.elements[i], self.elements[j])
            for i, ups in enumerate(self._upper_covers)
            for j in ups
        ]

    def upper_covers(self, x: str) -> list[str]:
        return [self.elements[j] for j in self._upper_covers[self.index(x)]]

    def lower_covers(self, x: str) -> list[str]:
        return [self.elements[j] for j in self._lower_covers[self.index(x)]]

    def up_set(self, x: str) -> list[str]:
        return [self.elements[j] for j in _bits(self._up[self.index(x)])]

    def down_set(self, x: str) -> list[str]:
        return [self.elements[j] for j in _bits(self._down[self.index(x)])]

    def rank(self, x: str) -> int:
        """Length of the longest chain ending at ``x``."""
        return self._height[self.index(x)]

    def minimal_elements(self) -> list[str]:
        return [self.elements[i] for i, low in enumerate(self._lower_covers) if not low]

    def maximal_elements(self) -> list[str]:
        return [self.elements[i] for i, up in enumerate(self._upper_covers) if not up]

    def is_graded(self) -> bool:
        return all(
            self._height[j] == self._height[i] + 1
            for i, ups in enumerate(self._upper_covers)
            for j in ups
        ) and len({self._height[i] for i, up in enumerate(self._upper_covers) if not up}) <= 1

    def canonical_order(self) -> list[str]:
        """Elements sorted by (rank, label): a linear extension."""
        return sorted(self.elements, key=lambda x: (self.rank(x), x))

    def join(self, x: str, y: str) -> str | None:
        common = self._up[self.index(x)] & self._up[self.index(y)]
        least = [j for j in _bits(common) if self._down[j] & common == 1 << j]
        return self.elements[least[0]] if len(least) == 1 else None

    def meet(self, x: str, y: str) -> str | None:
        common = self._down[self.index(x)] & self._down[self.index(y)]
        greatest = [j for j in _bits(common) if self._up[j] & common == 1 << j]
        return self.elements[greatest[0]] if len(greatest) == 1 else None

    def is_lattice(self) -> bool:
        return all(
            self.join(x, y) is not None and self.meet(x, y) is not None
            for x, y in combinations(self.elements, 2)
        )

    def transitive_reduction(self) -> list[tuple[str, str]]:
        """Covers recomputed from scratch out of the full relation."""
        relation = [
            (x, y) for x in self.elements for y in self.up_set(x) if x != y
        ]
        implied = {
            (x, z)
            for x, y in relation
            for z in self.up_set(y)
            if z != y
        }
        return sorted(pair for pair in relation if pair not in implied)

    def induced(self, labels: Iterable[str]) -> Poset:
        keep = sorted(set(labels))
        positions = [self.index(label) for label in keep]
        up = []
        for i in positions:
            mask = 0
            for new_j, j in enumerate(positions):
                if (self._up[i] >> j) & 1:
                    mask |= 1 << new_j
            up.append(mask)
        payload = {label: self.payload[label] for label in keep if label in self.payload}
        return Poset._from_masks(keep, up, payload)


class BoundedPoset(Poset):
    """A poset with a least element ``bottom`` and a greatest element ``top``."""

    bottom: str
    top: str

    @classmethod
    def of(cls, poset: Poset, bottom: str | None = None, top: str | None = None) -> BoundedPoset:
        minimal = poset.minimal_elements()
        maximal = poset.maximal_elements()
        if len(minimal) != 1 or len(maximal) != 1:
            raise PosetError(
                f"poset is not bounded: {len(minimal)} minimal, {len(maximal)} maximal elements"
            )
        bounded = cls._from_masks(poset.elements, list(poset._up), poset.payload)
        bounded.bottom = bottom or minimal[0]
        bounded.top = top or maximal[0]
        if bounded.bottom != minimal[0] or bounded.top != maximal[0]:
            raise PosetError("declared bounds are not the extremes of the order")
        return bounded

    def __repr__(self) -> str:
        return f"BoundedPoset({len(self)} elements, bottom={self.bottom!r}, top={self.top!r})"


# =============================================================================
# Operations
# =============================================================================

BOTTOM = "<0>"
TOP = "<1>"


def _fresh(label: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    while label in taken:
        label += "'"
    return label


def adjoin_bounds(p: Poset) -> BoundedPoset:
    bottom = _fresh(BOTTOM, p.elements)
    top = _fresh(TOP, set(p.elements) | {bottom})
    relations = [(x, y) for x, y in p.covers]
    relations += [(bottom, x) for x in p.elements]
    relations += [(x, top) for x in p.elements]
    relations.append((bottom, top))
    poset = Poset([*p.elements, bottom, top], relations, p.payload)
    return BoundedPoset.of(poset, bottom, top)


def proper_part(p: BoundedPoset) -> Poset:
    if p.bottom == p.top:
        raise PosetError("proper part of a one-element poset is undefined")
    return p.induced(x for x in p.elements if x not in (p.bottom, p.top))


def moebius(p: BoundedPoset | Poset, x: str, y: str) -> int:
    """μ(x, y), memoized per starting element."""
    i, j = p.index(x), p.index(y)
    if not (p._up[i] >> j) & 1:
        raise NotComparable(x, y)
    table = p._mobius.get(i)
    if table is None:
        table = {}
        above = p._up[i]
        for k in sorted(_bits(above), key=lambda k: p._height[k]):
            if k == i:
                table[k] = 1
            else:
                between = p._down[k] & above & ~(1 << k)
                table[k] = -sum(table[w] for w in _bits(between))
        p._mobius[i] = table
    return table[j]


def maximal_chains(p: Poset) -> list[PosetChain]:
    chains: list[PosetChain] = []

    def extend(path: list[int]) -> None:
        ups = p._upper_covers[path[-1]]
        if not ups:
            chains.append(tuple(p.elements[i] for i in path))
            return
        for j in ups:
            path.append(j)
            extend(path)
            path.pop()

    for i, low in enumerate(p._lower_covers):
        if not low:
            extend([i])
    return sorted(chains)


def closed_interval(p: Poset, x: str, y: str) -> Poset:
    if not p.leq(x, y):
        raise NotComparable(x, y)
    mask = p._up[p.index(x)] & p._down[p.index(y)]
    return p.induced(p.elements[k] for k in _bits(mask))


def induced_subposet(p: Poset, labels: Iterable[str]) -> Poset:
    return p.induced(labels)


def order_complex(p: Poset) -> SimplicialComplex:
    """Complex of all chains; vertices ordered along the canonical linear extension."""
    from splitbasis.homology.complex import SimplicialComplex

    order = p.canonical_order()
    return SimplicialComplex(order, maximal_chains(p))


def boolean_lattice(m: int) -> BoundedPoset:
    def label(subset: Sequence[int]) -> str:
        return "{" + ",".join(str(v) for v in subset) + "}"

    subsets = [s for k in range(m + 1) for s in combinations(range(1, m + 1), k)]
    relations = [
        (label(s), label(tuple(sorted((*s, v)))))
        for s in subsets
        for v in range(1, m + 1)
        if v not in s
    ]
    poset = Poset([label(s) for s in subsets], relations, {label(s): frozenset(s) for s in subsets})
    return BoundedPoset.of(poset, label(()), label(tuple(range(1, m + 1))))


def chain_poset(k: int) -> Poset:
    labels = [f"c{i:03d}" for i in range(k)]
    return Poset(labels, zip(labels, labels[1:]))


# =============================================================================
# Isomorphism
# =============================================================================


class IsomorphismResult:
    """Outcome of an isomorphism search; truthy when a witness was found."""

    def __init__(self, witness: dict[str, str] | None):
        self.witness = witness

    def __bool__(self) -> bool:
        return self.witness is not None

    def __repr__(self) -> str:
        return f"IsomorphismResult(found={self.witness is not None})"


def _signature(p: Poset, i: int) -> tuple[int, int, int, int, int]:
    return (
        p._height[i],
        len(p._upper_covers[i]),
        len(p._lower_covers[i]),
        bin(p._up[i]).count("1"),
        bin(p._down[i]).count("1"),
    )


def is_isomorphic(p: Poset, q: Poset) -> IsomorphismResult:
    """Backtracking search for an order isomorphism p → q."""
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return IsomorphismResult(None)
    sig_p = [_signature(p, i) for i in range(len(p))]
    sig_q = [_signature(q, j) for j in range(len(q))]
    if sorted(sig_p) != sorted(sig_q):
        return IsomorphismResult(None)
    candidates: dict[tuple[int, ...], list[int]] = {}
    for j, sig in enumerate(sig_q):
        candidates.setdefault(sig, []).append(j)

    order = p._linear_extension()
    image = [-1] * len(p)
    used = [False] * len(q)

    def consistent(i: int, j: int) -> bool:
        for k in order:
            mapped = image[k]
            if mapped < 0:
                continue
            if bool((p._up[k] >> i) & 1) != bool((q._up[mapped] >> j) & 1):
                return False
            if bool((p._up[i] >> k) & 1) != bool((q._up[j] >> mapped) & 1):
                return False
        return True

    def search(position: int) -> bool:
        if position == len(order):
            return True
        i = order[position]
        for j in candidates[sig_p[i]]:
            if used[j] or not consistent(i, j):
                continue
            image[i], used[j] = j, True
            if search(position + 1):
                return True
            image[i], used[j] = -1, False
        return False

    if not search(0):
        return IsomorphismResult(None)
    return IsomorphismResult({p.elements[i]: q.elements[image[i]] for i in range(len(p))})


def boolean_atoms(b: Poset) -> tuple[list[str], dict[frozenset[int], str]]:
    """Atoms of a Boolean lattice and the map from atom-index sets to their joins.

    Atoms are numbered 1..m in label order. Raises NotBoolean when ``b`` is
    not isomorphic to 2^[m].
    """
    bottoms = b.minimal_elements()
    if len(bottoms) != 1:
        raise NotBoolean(f"{len(bottoms)} minimal elements")
    m = len(b.upper_covers(bottoms[0]))
    if len(b) != 2**m:
        raise NotBoolean(f"{len(b)} elements is not 2^{m}")
    reference = boolean_lattice(m)
    found = is_isomorphic(reference, b)
    if not found:
        raise NotBoolean(f"not isomorphic to the Boolean lattice of rank {m}")
    witness = found.witness
    assert witness is not None
    singletons = {v: witness["{" + str(v) + "}"] for v in range(1, m + 1)}
    atoms = sorted(singletons.values())
    position = {v: atoms.index(atom) + 1 for v, atom in singletons.items()}
    joins = {
        frozenset(position[v] for v in reference.payload[label]): witness[label]
        for label in reference.elements
    }
    return atoms, joins
