"""Matrices over a commutative ring, with value semantics throughout."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .rings import Element, Ring, dot_list, vec_add, vec_scale, vec_sum, zeros


class DimensionError(ValueError):
    """Shapes or indices that an operation does not accept."""


@dataclass(frozen=True, init=False)
class Matrix:
    """An ``m x n`` matrix stored as a tuple of row tuples.

    ``ncols`` is carried explicitly so that matrices with no rows still
    have a width.
    """

    ring: Ring
    rows: tuple
    ncols: int

    def __init__(self, ring: Ring, rows: Sequence[Sequence[Element]], ncols: Optional[int] = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for k, r in enumerate(rows):
            if len(r) != ncols:
                raise DimensionError(f"row {k} has length {len(r)}, expected {ncols}")
            for x in r:
                if not ring.contains(x):
                    raise DimensionError(f"entry {x!r} in row {k} is not in {ring}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def _trusted(cls, ring: Ring, rows: tuple, ncols: int) -> "Matrix":
        # skips validation; callers guarantee shape and membership
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)
        return self

    @classmethod
    def from_ints(cls, ring: Ring, rows: Sequence[Sequence[int]]) -> "Matrix":
        """Matrix whose entries are the images of integers in ``ring``."""
        return cls(ring, [[ring.from_int(x) for x in r] for r in rows])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    @property
    def is_square(self) -> bool:
        return len(self.rows) == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return entry(i, j, self)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"Matrix({self.ring.descriptor!r}, {self.tolist()!r})"


def is_matrix(ring: Ring, a, m: int, n: int) -> bool:
    """True iff ``a`` has exactly ``m`` rows, each a length-``n`` vector over ``ring``."""
    rows = a.rows if isinstance(a, Matrix) else a
    try:
        if len(rows) != m:
            return False
        return all(len(r) == n and all(ring.contains(x) for x in r) for r in rows)
    except TypeError:
        return False


def _check_index(k: int, bound: int, what: str) -> None:
    if not 0 <= k < bound:
        raise DimensionError(f"{what} index {k} out of range [0, {bound})")


def entry(i: int, j: int, a: Matrix) -> Element:
    _check_index(i, a.nrows, "row")
    _check_index(j, a.ncols, "column")
    return a.rows[i][j]


def row(i: int, a: Matrix) -> tuple:
    _check_index(i, a.nrows, "row")
    return a.rows[i]


def col(j: int, a: Matrix) -> tuple:
    _check_index(j, a.ncols, "column")
    return tuple(r[j] for r in a.rows)


def replace_row(a: Matrix, k: int, r: Sequence[Element]) -> Matrix:
    _check_index(k, a.nrows, "row")
    if len(r) != a.ncols:
        raise DimensionError(f"replacement row has length {len(r)}, expected {a.ncols}")
    rows = list(a.rows)
    rows[k] = tuple(r)
    return Matrix(a.ring, rows, a.ncols)


def replace_col(a: Matrix, k: int, r: Sequence[Element]) -> Matrix:
    return transpose(replace_row(transpose(a), k, r))


def _check_same_dims(a: Matrix, b: Matrix) -> None:
    if a.dims != b.dims:
        raise DimensionError(f"dimension mismatch: {a.dims} vs {b.dims}")


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _check_same_dims(a, b)
    ring = a.ring
    return Matrix._trusted(ring, tuple(vec_add(ring, u, v) for u, v in zip(a.rows, b.rows)), a.ncols)


def mat_scale(c: Element, a: Matrix) -> Matrix:
    ring = a.ring
    return Matrix._trusted(ring, tuple(vec_scale(ring, c, r) for r in a.rows), a.ncols)


def mat_sum(a: Matrix) -> Element:
    """Row-major sum of all entries."""
    ring = a.ring
    acc = ring.zero
    for r in a.rows:
        acc = ring.add(vec_sum(ring, r), acc)
    return acc


def transpose(a: Matrix) -> Matrix:
    """The matrix whose rows are the columns of ``a``."""
    m, n = a.dims
    if m == 0 or n == 0:
        raise DimensionError("cannot transpose an empty matrix")
    return Matrix._trusted(a.ring, tuple(zip(*a.rows)), m)


def multiply(a: Matrix, b: Matrix) -> Matrix:
    """Row ``i`` of the product is ``row(i, a)`` dotted with each column of ``b``."""
    m, n = a.dims
    n2, p = b.dims
    if n != n2:
        raise DimensionError(f"cannot multiply {m}x{n} by {n2}x{p}")
    if m == 0 or n == 0 or p == 0:
        raise DimensionError("matrix product needs positive dimensions")
    ring = a.ring
    cols = transpose(b).rows
    return Matrix._trusted(ring, tuple(dot_list(ring, r, cols) for r in a.rows), p)


def delta(ring: Ring, i: int, j: int) -> Element:
    return ring.one if i == j else ring.zero


def unit_vector(ring: Ring, i: int, n: int) -> tuple:
    _check_index(i, n, "unit vector")
    return tuple(delta(ring, i, k) for k in range(n))


def identity(ring: Ring, n: int) -> Matrix:
    if n < 1:
        raise DimensionError("identity matrix needs positive size")
    return Matrix._trusted(ring, tuple(unit_vector(ring, i, n) for i in range(n)), n)


def zero_matrix(ring: Ring, m: int, n: int) -> Matrix:
    return Matrix._trusted(ring, (zeros(ring, n),) * m, n)


def delete_nth(k: int, items: Sequence) -> tuple:
    _check_index(k, len(items), "position")
    return tuple(items[:k]) + tuple(items[k + 1:])


def delete_row(k: int, a: Matrix) -> Matrix:
    return Matrix._trusted(a.ring, delete_nth(k, a.rows), a.ncols)


def delete_col(k: int, a: Matrix) -> Matrix:
    # transpose, drop the row, transpose back
    return transpose(delete_row(k, transpose(a)))


def minor(i: int, j: int, a: Matrix) -> Matrix:
    """``a`` with row ``i`` and column ``j`` removed."""
    n = a.nrows
    if not a.is_square:
        raise DimensionError(f"minor of a non-square {a.dims} matrix")
    if n < 2:
        raise DimensionError("minor needs a matrix of size at least 2")
    _check_index(i, n, "row")
    _check_index(j, n, "column")
    return delete_col(j, delete_row(i, a))


def entry_diff(a: Matrix, b: Matrix) -> Optional[tuple[int, int]]:
    """Row-major first position where ``a`` and ``b`` differ, or None if equal."""
    _check_same_dims(a, b)
    eq = a.ring.eq
    for i, (u, v) in enumerate(zip(a.rows, b.rows)):
        for j, (x, y) in enumerate(zip(u, v)):
            if not eq(x, y):
                return i, j
    return None

