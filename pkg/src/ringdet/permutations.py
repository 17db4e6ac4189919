"""The symmetric group on ``{0, ..., n-1}``.

A permutation is stored by its image sequence: ``p[i]`` is the image of ``i``.
Composition is fixed by the action on lists,
``apply(apply(l, p), q) == apply(l, compose(p, q))``, which forces
``compose(p, q)[i] == p[q[i]]``.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from itertools import permutations as _lex_permutations
from typing import Sequence, TypeVar

T = TypeVar("T")

DEFAULT_CAP = 8


class Permutation(tuple):
    """Immutable image sequence of a bijection of ``range(n)``."""

    __slots__ = ()

    def __new__(cls, images: Sequence[int] = ()):
        self = super().__new__(cls, images)
        n = len(self)
        if sorted(self) != list(range(n)):
            raise ValueError(f"{tuple(self)} is not a permutation of range({n})")
        return self

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def is_even(self) -> bool:
        return parity(self) == 0

    @property
    def sign(self) -> int:
        return -1 if parity(self) else 1

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def identity_perm(n: int) -> Permutation:
    if n < 1:
        raise ValueError("permutation degree must be positive")
    return Permutation(range(n))


def enumerate_perms(n: int, cap: int = DEFAULT_CAP) -> tuple[Permutation, ...]:
    """All ``n!`` permutations of degree ``n`` in lexicographic order.

    The identity comes first.  ``cap`` guards against factorial blowup.
    """
    if n < 1:
        raise ValueError("permutation degree must be positive")
    if n > cap:
        raise ValueError(f"refusing to enumerate {n}! permutations (cap is {cap})")
    return _enumerate(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in _lex_permutations(range(n)))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return Permutation([p[i] for i in q])


def invert(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, image in enumerate(p):
        inv[image] = i
    return Permutation(inv)


def transposition(i: int, j: int, n: int) -> Permutation:
    """The permutation exchanging ``i`` and ``j``."""
    if i == j:
        raise ValueError("a transposition needs two distinct indices")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"indices ({i}, {j}) out of range for degree {n}")
    images = list(range(n))
    images[i], images[j] = j, i
    return Permutation(images)


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def parity(p: Sequence[int]) -> int:
    """0 for an even permutation, 1 for an odd one."""
    return inversions(p) % 2


def decompose(p: Sequence[int]) -> list[Permutation]:
    """Transpositions whose left-to-right composition is ``p``.

    Selection sort on the images: right-multiplying by a transposition swaps
    two positions, so ``p * s1 * ... * sk == id`` and ``p == sk * ... * s1``.
    """
    n = len(p)
    cur = list(p)
    swaps = []
    for i in range(n):
        if cur[i] != i:
            j = cur.index(i, i + 1)
            cur[i], cur[j] = cur[j], cur[i]
            swaps.append(transposition(i, j, n))
    swaps.reverse()
    return swaps


def compose_all(perms: Sequence[Sequence[int]], n: int) -> Permutation:
    """Left-to-right composition; the identity for an empty list."""
    return reduce(compose, perms, identity_perm(n))


def apply(items: Sequence[T], p: Sequence[int]) -> list[T]:
    """Rearrange ``items`` so that position ``i`` holds ``items[p[i]]``."""
    if len(items) != len(p):
        raise ValueError(f"length mismatch: {len(items)} items, degree {len(p)}")
    return [items[k] for k in p]
