"""Determinants over a commutative ring.

Three independent routes to the same value are provided: the permutation
sum (:func:`det`), cofactor expansion along any row or column
(:func:`expand_row`, :func:`expand_col`) and recursive expansion along row 0
(:func:`det_rec`).  The cofactor matrix and classical adjoint are built on
top of them.

The second half of the module evaluates the k-tuple sums used to show that
any n-linear function of the rows that vanishes on adjacent equal rows is a
multiple of the determinant.  :func:`check_uniqueness` runs that argument on
concrete inputs for a user-supplied functional.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .matrix import (
    DimensionError,
    Matrix,
    entry,
    identity,
    minor,
    multiply,
    replace_row,
    row,
    transpose,
    unit_vector,
)
from .permutations import DEFAULT_CAP, Permutation, enumerate_perms, parity
from .rings import (
    Element,
    Integers,
    IntegersMod,
    Polynomials,
    Rationals,
    Ring,
    vec_add,
    vec_prod,
    vec_scale,
)


def _size(a: Matrix, n: Optional[int], minimum: int = 1) -> int:
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.dims[0]}x{a.dims[1]}")
    if n is None:
        n = a.nrows
    elif n != a.nrows:
        raise DimensionError(f"matrix is {a.nrows}x{a.nrows}, not {n}x{n}")
    if n < minimum:
        raise DimensionError(f"matrix size must be at least {minimum}, got {n}")
    return n


# -- permutation sum ---------------------------------------------------------


def det_prod(a: Matrix, p: Sequence[int], n: Optional[int] = None) -> Element:
    """Product of ``entry(i, p[i], a)`` over all rows, unsigned."""
    n = _size(a, n)
    if len(p) != n:
        raise DimensionError(f"permutation of degree {len(p)} for a {n}x{n} matrix")
    ring = a.ring
    rows = a.rows
    acc = ring.one
    for i in range(n):
        acc = ring.mul(acc, rows[i][p[i]])
    return acc


def det_term(a: Matrix, p: Sequence[int], n: Optional[int] = None) -> Element:
    """Signed contribution of permutation ``p`` to the determinant of ``a``."""
    prod = det_prod(a, p, n)
    return a.ring.neg(prod) if parity(p) else prod


@dataclass(frozen=True)
class SignedTerm:
    permutation: Permutation
    product: Element
    sign_applied: bool


def signed_terms(a: Matrix, n: Optional[int] = None, cap: int = DEFAULT_CAP) -> list[SignedTerm]:
    """Every term of the permutation sum, for inspection."""
    n = _size(a, n)
    return [
        SignedTerm(p, det_prod(a, p, n), bool(parity(p)))
        for p in enumerate_perms(n, cap)
    ]


def det(a: Matrix, n: Optional[int] = None, cap: int = DEFAULT_CAP) -> Element:
    """Determinant as the signed sum over all ``n!`` permutations.

    Raises ``ValueError`` when ``n`` exceeds ``cap``; use :func:`det_rec`
    for larger matrices.
    """
    n = _size(a, n)
    if n == 1:
        return a.rows[0][0]
    ring = a.ring
    rows = a.rows
    mul, add, neg = ring.mul, ring.add, ring.neg
    total = ring.zero
    for p in enumerate_perms(n, cap):
        prod = ring.one
        for i in range(n):
            prod = mul(prod, rows[i][p[i]])
        total = add(total, neg(prod) if parity(p) else prod)
    return total


# -- cofactors ---------------------------------------------------------------

DetFn = Callable[[Matrix], Element]


def cofactor(i: int, j: int, a: Matrix, n: Optional[int] = None, det_fn: DetFn = det) -> Element:
    """``(-1)**(i+j)`` times the determinant of ``minor(i, j, a)``."""
    n = _size(a, n, minimum=2)
    d = det_fn(minor(i, j, a))
    return d if (i + j) % 2 == 0 else a.ring.neg(d)


def expand_col(a: Matrix, j: int, n: Optional[int] = None, det_fn: DetFn = det) -> Element:
    """Cofactor expansion down column ``j``."""
    n = _size(a, n, minimum=2)
    ring = a.ring
    total = ring.zero
    for i in range(n):
        total = ring.add(total, ring.mul(entry(i, j, a), cofactor(i, j, a, n, det_fn)))
    return total


def expand_row(a: Matrix, i: int, n: Optional[int] = None, det_fn: DetFn = det) -> Element:
    """Cofactor expansion along row ``i``."""
    n = _size(a, n, minimum=2)
    ring = a.ring
    total = ring.zero
    for j in range(n):
        total = ring.add(total, ring.mul(entry(i, j, a), cofactor(i, j, a, n, det_fn)))
    return total


def det_rec(a: Matrix, n: Optional[int] = None) -> Element:
    """Determinant by recursive expansion along row 0.  No size cap."""
    n = _size(a, n)
    return _det_rec(a.ring, a.rows)


def _det_rec(ring: Ring, rows: tuple) -> Element:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (p, q), (r, s) = rows
        return ring.add(ring.mul(p, s), ring.neg(ring.mul(q, r)))
    below = rows[1:]
    total = ring.zero
    for j, x in enumerate(rows[0]):
        if ring.is_zero(x):
            continue
        sub = _det_rec(ring, tuple(r[:j] + r[j + 1:] for r in below))
        term = ring.mul(x, sub)
        total = ring.add(total, term if j % 2 == 0 else ring.neg(term))
    return total


def cofactor_matrix(a: Matrix, n: Optional[int] = None, det_fn: DetFn = det) -> Matrix:
    n = _size(a, n, minimum=2)
    return Matrix._trusted(
        a.ring,
        tuple(tuple(cofactor(i, j, a, n, det_fn) for j in range(n)) for i in range(n)),
        n,
    )


def adjoint(a: Matrix, n: Optional[int] = None, det_fn: DetFn = det) -> Matrix:
    """Classical adjoint (adjugate): the transposed cofactor matrix."""
    return transpose(cofactor_matrix(a, n, det_fn))


# -- uniqueness harness ------------------------------------------------------


@dataclass(frozen=True)
class DeterminantFunctional:
    """A function of square matrices assumed n-linear in the rows and zero
    whenever two adjacent rows are equal.

    The assumptions are not enforced; :func:`check_uniqueness` samples them.
    """

    name: str
    evaluate: Callable[[Matrix, int], Element]

    def __call__(self, a: Matrix, n: Optional[int] = None) -> Element:
        return self.evaluate(a, a.nrows if n is None else n)


def det_functional(cap: int = DEFAULT_CAP) -> DeterminantFunctional:
    return DeterminantFunctional("det", lambda a, n: det(a, n, cap))


def product_functional(b: Matrix, cap: int = DEFAULT_CAP) -> DeterminantFunctional:
    """``a -> det(a b)`` for a fixed ``b``."""
    return DeterminantFunctional("det(a*b)", lambda a, n: det(multiply(a, b), n, cap))


def expand_col_functional(j: int) -> DeterminantFunctional:
    return DeterminantFunctional(f"expand_col[{j}]", lambda a, n: expand_col(a, j, n))


def all_tuples(k: int, n: int, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All ``n**k`` sequences of length ``k`` over ``range(n)``.

    Built one position at a time: each (k-1)-tuple is extended by every
    index below ``n``, preserving the order of the shorter tuples.
    """
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n > cap:
        raise ValueError(f"refusing to enumerate {n}**{k} tuples (cap is {cap})")
    tuples: list[tuple[int, ...]] = [()]
    for _ in range(k):
        tuples = [x + (i,) for x in tuples for i in range(n)]
    return tuples


def extract_entries(x: Sequence[int], a: Matrix) -> tuple:
    """``entry(j, x[j], a)`` for each position ``j`` of ``x``."""
    return tuple(entry(j, xj, a) for j, xj in enumerate(x))


def unit_rows(ring: Ring, x: Sequence[int], n: int) -> tuple:
    return tuple(unit_vector(ring, xj, n) for xj in x)


def eval_tuple(x: Sequence[int], k: int, a: Matrix, n: int, f: DeterminantFunctional) -> Element:
    """Entry product along ``x`` times ``f`` of ``a`` with its first ``k`` rows
    replaced by the unit vectors named in ``x``."""
    _size(a, n)
    if len(x) != k or k > n:
        raise ValueError(f"expected a {k}-tuple with k <= {n}, got {tuple(x)}")
    if any(not 0 <= xj < n for xj in x):
        raise ValueError(f"tuple {tuple(x)} has an index outside range({n})")
    ring = a.ring
    b = Matrix._trusted(ring, unit_rows(ring, x, n) + a.rows[k:], n)
    return ring.mul(vec_prod(ring, extract_entries(x, a)), f(b, n))


def sum_tuples(tuples: Sequence[Sequence[int]], k: int, a: Matrix, n: int, f: DeterminantFunctional) -> Element:
    ring = a.ring
    total = ring.zero
    for x in tuples:
        total = ring.add(total, eval_tuple(x, k, a, n, f))
    return total


@dataclass
class UniquenessVerdict:
    """Outcome of :func:`check_uniqueness` for one functional and one matrix.

    ``levels[k]`` is the k-tuple sum; ``level_steps[k]`` says whether
    ``levels[k+1] == levels[k]``.
    """

    functional: str
    n: int
    value: Element
    det_value: Element
    value_at_identity: Element
    levels: list = field(default_factory=list)
    level_steps: list = field(default_factory=list)
    base_level: bool = False
    top_level: bool = False
    final_identity: bool = False
    constraints: dict = field(default_factory=dict)

    @property
    def levels_invariant(self) -> bool:
        return all(self.level_steps)

    @property
    def ok(self) -> bool:
        return (
            self.levels_invariant
            and self.base_level
            and self.top_level
            and self.final_identity
            and all(self.constraints.values())
        )

    def failures(self) -> list[str]:
        out = [f"level {k} -> {k + 1}" for k, good in enumerate(self.level_steps) if not good]
        if not self.base_level:
            out.append("level 0 differs from f(a)")
        if not self.top_level:
            out.append("level n differs from det(a) * f(I)")
        if not self.final_identity:
            out.append("f(a) != det(a) * f(I)")
        out.extend(f"constraint {name}" for name, good in self.constraints.items() if not good)
        return out


def _random_row(ring: Ring, n: int, rng: random.Random) -> tuple:
    return tuple(ring.random_element(rng) for _ in range(n))


def sample_constraints(
    f: DeterminantFunctional,
    a: Matrix,
    n: int,
    rng: random.Random,
    samples: int = 3,
    alternating: bool = True,
) -> dict[str, bool]:
    """Spot-check the assumptions on ``f`` around the matrix ``a``."""
    ring = a.ring
    eq = ring.eq
    results = {}

    good = True
    for _ in range(samples):
        i = rng.randrange(n)
        c = ring.random_element(rng)
        x, y = _random_row(ring, n, rng), _random_row(ring, n, rng)
        combo = vec_add(ring, vec_scale(ring, c, x), y)
        lhs = f(replace_row(a, i, combo), n)
        rhs = ring.add(ring.mul(c, f(replace_row(a, i, x), n)), f(replace_row(a, i, y), n))
        good = good and eq(lhs, rhs)
    results["n-linear"] = good

    good = True
    for i in range(n - 1):
        b = replace_row(a, i + 1, row(i, a))
        good = good and ring.is_zero(f(b, n))
    results["adjacent-equal"] = good

    if alternating:
        good = True
        for i in range(n):
            for j in range(i + 2, n):
                b = replace_row(a, j, row(i, a))
                good = good and ring.is_zero(f(b, n))
        results["alternating"] = good
    return results


def check_uniqueness(
    f: DeterminantFunctional,
    a: Matrix,
    n: Optional[int] = None,
    *,
    rng: Optional[random.Random] = None,
    samples: int = 3,
    check_alternating: bool = True,
    cap: int = DEFAULT_CAP,
) -> UniquenessVerdict:
    """Evaluate every k-tuple sum for ``f`` on ``a`` and compare the two ends.

    Never raises for a badly behaved ``f``: broken assumptions show up as
    failed entries in the verdict.
    """
    n = _size(a, n)
    ring = a.ring
    eq = ring.eq
    rng = rng if rng is not None else random.Random(0)

    value = f(a, n)
    det_value = det(a, n, cap)
    at_identity = f(identity(ring, n), n)
    levels = [sum_tuples(all_tuples(k, n, cap), k, a, n, f) for k in range(n + 1)]
    target = ring.mul(det_value, at_identity)

    return UniquenessVerdict(
        functional=f.name,
        n=n,
        value=value,
        det_value=det_value,
        value_at_identity=at_identity,
        levels=levels,
        level_steps=[eq(levels[k + 1], levels[k]) for k in range(n)],
        base_level=eq(levels[0], value),
        top_level=eq(levels[n], target),
        final_identity=eq(value, target),
        constraints=sample_constraints(f, a, n, rng, samples, check_alternating),
    )


# -- characteristic polynomial -----------------------------------------------


def charpoly(a: Matrix, cap: int = DEFAULT_CAP) -> tuple[Polynomials, tuple]:
    """``det(t I - a)`` over the polynomial ring in ``t`` over ``a.ring``.

    Returns the polynomial ring and the (monic, degree ``n``) result.
    Only integer, rational and modular base rings are accepted.
    """
    n = _size(a, None)
    base = a.ring
    if not isinstance(base, (Integers, Rationals, IntegersMod)):
        raise ValueError(f"characteristic polynomial over {base} is not supported")
    if n > cap:
        raise ValueError(f"matrix size {n} exceeds cap {cap}")
    ring = Polynomials(base)
    t = ring.indeterminate
    rows = tuple(
        tuple(
            ring.add(t if i == j else ring.zero, ring.neg(ring.constant(x)))
            for j, x in enumerate(r)
        )
        for i, r in enumerate(a.rows)
    )
    return ring, det_rec(Matrix._trusted(ring, rows, n))
