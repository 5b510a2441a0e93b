"""
Exact rational linear algebra for flats.

A ``FlatSubspace`` is the solution set of a system of linear equations over
ℚ, stored as the nonzero rows of its reduced row echelon form (augmented
with right-hand sides, zero for linear flats). Since the echelon form is
canonical, two flats are equal exactly when their stored rows are.
Row reduction is delegated to sympy's domain matrices over QQ.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = tuple[Fraction, ...]


def to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot read {value!r} as an exact rational")


def to_vector(values: Iterable[Any]) -> Vector:
    return tuple(to_fraction(v) for v in values)


def dot(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b, strict=True)), Fraction(0))


def primitive(vector: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Positive multiple of ``vector`` with coprime integer entries."""
    fractions = [Fraction(v) for v in vector]
    scale = lcm(*(f.denominator for f in fractions)) if fractions else 1
    ints = [int(f * scale) for f in fractions]
    common = gcd(*ints) or 1
    return tuple(v // common for v in ints)


def rref(rows: Sequence[Sequence[Fraction]], width: int) -> tuple[list[Vector], tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form, with pivot columns."""
    if not rows:
        return [], ()
    dm = DomainMatrix(
        [[QQ(f.numerator, f.denominator) for f in row] for row in rows], (len(rows), width), QQ
    )
    reduced, pivots = dm.rref()
    out = [tuple(to_fraction(x) for x in row) for row in reduced.to_list()[: len(pivots)]]
    return out, tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], width: int) -> int:
    return len(rref(rows, width)[1])


def solve_square(matrix: Sequence[Sequence[Fraction]]) -> list[Vector] | None:
    """Columns of the inverse of a square matrix, or None if it is singular."""
    size = len(matrix)
    augmented = [
        [*row, *(Fraction(int(i == j)) for j in range(size))] for i, row in enumerate(matrix)
    ]
    reduced, pivots = rref(augmented, 2 * size)
    if pivots != tuple(range(size)):
        return None
    return [tuple(reduced[i][size + j] for i in range(size)) for j in range(size)]


def _format_form(row: Vector) -> str:
    *coeffs, rhs = row
    terms = []
    for i, c in enumerate(coeffs, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        body = f"x{i}" if magnitude == 1 else f"{magnitude}*x{i}"
        terms.append(f"{sign} {body}")
    text = " ".join(terms).removeprefix("+ ") or "0"
    if text.startswith("- "):
        text = "-" + text[2:]
    return f"{text} = {rhs}"


class FlatSubspace:
    """An affine (usually linear) subspace of ℚ^d in canonical echelon form."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(
        self,
        ambient_dim: int,
        equations: Iterable[Sequence[Any]] = (),
        rhs: Iterable[Any] | None = None,
    ):
        equations = [to_vector(eq) for eq in equations]
        offsets = [Fraction(0)] * len(equations) if rhs is None else list(to_vector(rhs))
        if len(offsets) != len(equations):
            raise ValueError("one right-hand side per equation")
        for eq in equations:
            if len(eq) != ambient_dim:
                raise ValueError(f"equation of length {len(eq)} in dimension {ambient_dim}")
        augmented = [(*eq, c) for eq, c in zip(equations, offsets)]
        self.ambient_dim = ambient_dim
        self.rows, self.pivots = rref(augmented, ambient_dim + 1)

    @classmethod
    def _from_rows(cls, ambient_dim: int, rows: list[Vector]) -> FlatSubspace:
        flat = cls.__new__(cls)
        flat.ambient_dim = ambient_dim
        flat.rows, flat.pivots = rref(rows, ambient_dim + 1)
        return flat

    @property
    def is_empty(self) -> bool:
        return bool(self.pivots) and self.pivots[-1] == self.ambient_dim

    @property
    def is_linear(self) -> bool:
        return all(row[-1] == 0 for row in self.rows)

    @property
    def dim(self) -> int:
        return -1 if self.is_empty else self.ambient_dim - len(self.rows)

    @property
    def equations(self) -> list[Vector]:
        return [row[:-1] for row in self.rows]

    def intersect(self, other: FlatSubspace) -> FlatSubspace:
        return FlatSubspace._from_rows(self.ambient_dim, [*self.rows, *other.rows])

    def _in_row_space(self, vector: Sequence[Fraction]) -> bool:
        residual = list(vector)
        for row, pivot in zip(self.rows, self.pivots):
            factor = residual[pivot]
            if factor:
                residual = [a - factor * b for a, b in zip(residual, row)]
        return not any(residual)

    def within(self, other: FlatSubspace) -> bool:
        """Inclusion self ⊆ other: every equation of other follows from those of self."""
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return all(self._in_row_space(row) for row in other.rows)

    def in_hyperplane(self, normal: Sequence[Any], offset: Any = 0) -> bool:
        if self.is_empty:
            return True
        return self._in_row_space([*to_vector(normal), to_fraction(offset)])

    def point(self) -> Vector:
        """A particular point: free coordinates set to zero."""
        if self.is_empty:
            raise ValueError("empty flat has no points")
        point = [Fraction(0)] * self.ambient_dim
        for row, pivot in zip(self.rows, self.pivots):
            point[pivot] = row[-1]
        return tuple(point)

    def basis(self) -> list[Vector]:
        """Direction vectors, one per free coordinate."""
        if self.is_empty:
            return []
        free = [j for j in range(self.ambient_dim) if j not in self.pivots]
        vectors = []
        for f in free:
            v = [Fraction(0)] * self.ambient_dim
            v[f] = Fraction(1)
            for row, pivot in zip(self.rows, self.pivots):
                v[pivot] = -row[f]
            vectors.append(tuple(v))
        return vectors

    @property
    def label(self) -> str:
        if self.is_empty:
            return "{empty}"
        return "{" + "; ".join(_format_form(row) for row in self.rows) + "}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlatSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ambient_dim, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"FlatSubspace(dim={self.dim}, {self.label})"
