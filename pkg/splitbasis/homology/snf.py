"""
Sparse integer matrices and their Smith normal form.

Elimination runs over Python integers, pivoting on an entry of least
absolute value and reducing until the pivot row and column are clear.
The resulting diagonal is then normalized into a divisibility chain.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from math import gcd
from typing import Any, NamedTuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from splitbasis.observe import get_logger

logger = get_logger("homology.snf")


class IntMatrix:
    """Row-sparse integer matrix with optional row/column labels."""

    def __init__(
        self,
        nrows: int,
        ncols: int,
        rows: Iterable[dict[int, int]] | None = None,
        row_labels: Sequence[Any] | None = None,
        col_labels: Sequence[Any] | None = None,
    ):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[dict[int, int]] = (
            [{j: v for j, v in row.items() if v} for row in rows] if rows is not None else []
        )
        while len(self.rows) < nrows:
            self.rows.append({})
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> IntMatrix:
        ncols = len(dense[0]) if dense else 0
        return cls(len(dense), ncols, [{j: int(v) for j, v in enumerate(row)} for row in dense])

    @classmethod
    def coerce(cls, matrix: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
        return matrix if isinstance(matrix, IntMatrix) else cls.from_dense(matrix)

    def to_dense(self) -> list[list[int]]:
        return [[row.get(j, 0) for j in range(self.ncols)] for row in self.rows]

    def transpose(self) -> IntMatrix:
        columns: list[dict[int, int]] = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                columns[j][i] = v
        return IntMatrix(self.ncols, self.nrows, columns, self.col_labels, self.row_labels)

    def multiply(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} x {other.shape}")
        out = []
        for row in self.rows:
            acc: dict[int, int] = {}
            for k, v in row.items():
                for j, w in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            out.append(acc)
        return IntMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self.rows)
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={nnz})"


class SnfResult(NamedTuple):
    invariant_factors: tuple[int, ...]
    rank: int
    shape: tuple[int, int]

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.invariant_factors if d > 1]

    @property
    def unimodular(self) -> bool:
        return all(d == 1 for d in self.invariant_factors)


def _divisibility_chain(diagonal: list[int]) -> tuple[int, ...]:
    ones = [d for d in diagonal if d == 1]
    rest = sorted(d for d in diagonal if d != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            g = gcd(rest[i], rest[j])
            rest[i], rest[j] = g, rest[i] * rest[j] // g
    return tuple(ones + sorted(rest))


def smith_normal_form(matrix: IntMatrix | Sequence[Sequence[int]]) -> SnfResult:
    m = IntMatrix.coerce(matrix)
    rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(m.rows) if r}
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)

    def add_row(target: int, source: int, factor: int) -> None:
        row = rows[target]
        for c, v in rows[source].items():
            value = row.get(c, 0) + factor * v
            if value:
                row[c] = value
                cols[c].add(target)
            elif c in row:
                del row[c]
                cols[c].discard(target)
        if not row:
            del rows[target]

    def choose_pivot() -> tuple[int, int]:
        best: tuple[int, int, int, int] | None = None
        for i, row in rows.items():
            for j, v in row.items():
                score = (abs(v), len(row) * len(cols[j]), i, j)
                if best is None or score < best:
                    best = score
            if best is not None and best[0] == 1:
                break
        assert best is not None
        return best[2], best[3]

    diagonal: list[int] = []
    while rows:
        i, j = choose_pivot()
        while True:
            p = rows[i][j]
            clean = True
            for r in sorted(cols[j] - {i}):
                add_row(r, i, -(rows[r][j] // p))
                if r in rows and j in rows[r]:
                    clean = False
            if not clean:
                i = min(cols[j], key=lambda r: (abs(rows[r][j]), r))
                continue
            for c in sorted(set(rows[i]) - {j}):
                value = rows[i][c] - (rows[i][c] // p) * p
                if value:
                    rows[i][c] = value
                    clean = False
                else:
                    del rows[i][c]
                    cols[c].discard(i)
            if not clean:
                j = min(rows[i], key=lambda c: (abs(rows[i][c]), c))
                continue
            break
        diagonal.append(abs(p))
        del rows[i]
        cols[j].discard(i)

    factors = _divisibility_chain(diagonal)
    logger.debug(
        "smith normal form",
        extra={"extra_fields": {"shape": m.shape, "rank": len(factors)}},
    )
    return SnfResult(factors, len(factors), m.shape)


def integer_rank(matrix: IntMatrix | Sequence[Sequence[int]]) -> int:
    return smith_normal_form(matrix).rank


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError("determinant needs a square matrix")
    if size == 0:
        return 1
    dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (size, size), ZZ)
    return int(dm.det())
