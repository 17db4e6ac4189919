"""Commutative rings with unity and operations on vectors of ring elements.

Elements are plain Python values in a canonical form, so structural
equality coincides with ring equality:

* ``Integers``     -- ``int``
* ``IntegersMod``  -- ``int`` in ``[0, m)``
* ``Rationals``    -- ``fractions.Fraction`` (always reduced, positive denominator)
* ``Polynomials``  -- ``tuple`` of base-ring coefficients, low degree first,
  with no trailing zero; the zero polynomial is ``()``

A vector is any finite sequence of elements; operations return tuples.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, Sequence

Element = Any
Vector = Sequence[Element]


class RingError(ValueError):
    """Bad ring descriptor or an element that does not belong to a ring."""


class Ring(ABC):
    """A commutative ring with unity.

    Subclasses are immutable; instances compare equal when they describe
    the same ring, which lets polynomial rings nest freely.
    """

    @property
    @abstractmethod
    def zero(self) -> Element: ...

    @property
    @abstractmethod
    def one(self) -> Element: ...

    @abstractmethod
    def add(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def mul(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def neg(self, x: Element) -> Element: ...

    @abstractmethod
    def contains(self, x: Element) -> bool: ...

    @property
    @abstractmethod
    def descriptor(self) -> str: ...

    @abstractmethod
    def from_int(self, k: int) -> Element:
        """Image of the integer ``k`` under the canonical map Z -> R."""

    @abstractmethod
    def random_element(self, rng: random.Random) -> Element:
        """A small pseudo-random element, for sampled law checks."""

    def eq(self, x: Element, y: Element) -> bool:
        return x == y

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def is_zero(self, x: Element) -> bool:
        return self.eq(x, self.zero)

    def __str__(self) -> str:
        return self.descriptor


@dataclass(frozen=True)
class Integers(Ring):
    zero = 0  # type: ignore[assignment]
    one = 1  # type: ignore[assignment]

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def contains(self, x):
        return type(x) is int

    @property
    def descriptor(self):
        return "integers"

    def from_int(self, k):
        return int(k)

    def random_element(self, rng):
        return rng.randint(-9, 9)


@dataclass(frozen=True)
class Rationals(Ring):
    zero = Fraction(0)  # type: ignore[assignment]
    one = Fraction(1)  # type: ignore[assignment]

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def contains(self, x):
        return type(x) is Fraction

    @property
    def descriptor(self):
        return "rationals"

    def from_int(self, k):
        return Fraction(k)

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


@dataclass(frozen=True)
class IntegersMod(Ring):
    """Z/mZ with elements stored as their representative in ``[0, m)``."""

    modulus: int

    def __post_init__(self) -> None:
        if type(self.modulus) is not int or self.modulus < 2:
            raise RingError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return (x + y) % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def contains(self, x):
        return type(x) is int and 0 <= x < self.modulus

    @property
    def descriptor(self):
        return f"zmod {self.modulus}"

    def from_int(self, k):
        return int(k) % self.modulus

    def random_element(self, rng):
        return rng.randrange(self.modulus)


@dataclass(frozen=True)
class Polynomials(Ring):
    """Polynomials in one indeterminate over ``base``."""

    base: Ring

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (self.base.one,)

    @property
    def indeterminate(self):
        return (self.base.zero, self.base.one)

    def _trim(self, coeffs: list) -> tuple:
        is_zero = self.base.is_zero
        end = len(coeffs)
        while end and is_zero(coeffs[end - 1]):
            end -= 1
        return tuple(coeffs[:end])

    def constant(self, c: Element) -> tuple:
        return self._trim([c])

    def add(self, x, y):
        if len(x) < len(y):
            x, y = y, x
        badd = self.base.add
        out = list(x)
        for i, c in enumerate(y):
            out[i] = badd(out[i], c)
        return self._trim(out) if len(x) == len(y) else tuple(out)

    def mul(self, x, y):
        if not x or not y:
            return ()
        badd, bmul = self.base.add, self.base.mul
        out = [self.base.zero] * (len(x) + len(y) - 1)
        for i, c in enumerate(x):
            for j, d in enumerate(y):
                out[i + j] = badd(out[i + j], bmul(c, d))
        # leading coefficients may multiply to zero over rings with zero divisors
        return self._trim(out)

    def neg(self, x):
        return tuple(self.base.neg(c) for c in x)

    def contains(self, x):
        return (
            type(x) is tuple
            and all(self.base.contains(c) for c in x)
            and (not x or not self.base.is_zero(x[-1]))
        )

    @property
    def descriptor(self):
        return f"poly over {self.base.descriptor}"

    def from_int(self, k):
        return self.constant(self.base.from_int(k))

    def random_element(self, rng):
        return self._trim([self.base.random_element(rng) for _ in range(rng.randint(0, 3))])

    def degree(self, x: tuple) -> int:
        """Degree of ``x``; -1 for the zero polynomial."""
        return len(x) - 1


def make_ring(descriptor: str) -> Ring:
    """Build a ring from ``integers | rationals | zmod <m> | poly over <descriptor>``.

    >>> make_ring("poly over zmod 6").descriptor
    'poly over zmod 6'
    """
    return _parse_descriptor(descriptor.split())


def _parse_descriptor(words: list[str]) -> Ring:
    text = " ".join(words)
    if words == ["integers"]:
        return Integers()
    if words == ["rationals"]:
        return Rationals()
    if len(words) == 2 and words[0] == "zmod":
        try:
            m = int(words[1])
        except ValueError:
            raise RingError(f"bad modulus in ring descriptor {text!r}") from None
        return IntegersMod(m)
    if len(words) >= 3 and words[:2] == ["poly", "over"]:
        return Polynomials(_parse_descriptor(words[2:]))
    raise RingError(f"unknown ring descriptor {text!r}")


# -- vectors -----------------------------------------------------------------


def _check_same_length(u: Vector, v: Vector) -> None:
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} != {len(v)}")


def dot(ring: Ring, u: Vector, v: Vector) -> Element:
    """Sum of the products of corresponding entries of ``u`` and ``v``."""
    _check_same_length(u, v)
    add, mul = ring.add, ring.mul
    acc = ring.zero
    for x, y in zip(u, v):
        acc = add(acc, mul(x, y))
    return acc


def dot_list(ring: Ring, u: Vector, rows: Iterable[Vector]) -> tuple:
    return tuple(dot(ring, u, r) for r in rows)


def vec_add(ring: Ring, u: Vector, v: Vector) -> tuple:
    _check_same_length(u, v)
    return tuple(ring.add(x, y) for x, y in zip(u, v))


def vec_scale(ring: Ring, c: Element, v: Vector) -> tuple:
    return tuple(ring.mul(c, x) for x in v)


def vec_sum(ring: Ring, v: Vector) -> Element:
    return reduce(ring.add, v, ring.zero)


def vec_prod(ring: Ring, v: Vector) -> Element:
    return reduce(ring.mul, v, ring.one)


def zeros(ring: Ring, n: int) -> tuple:
    return (ring.zero,) * n


def is_zero_vector(ring: Ring, v: Vector) -> bool:
    return all(ring.is_zero(x) for x in v)
