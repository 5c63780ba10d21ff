"""The value group: vectors of exact rationals under lexicographic order.

Rank ``m`` is a runtime parameter, so the same code serves plain Puiseux
exponents (rank 1) and the iterated fields of higher rank.  All arithmetic
is exact; exponents are immutable and totally ordered.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import StructuralError

Q = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class ExponentGroup:
    """The group of exponents: rank-``m`` rational vectors, ordered lexicographically.

    >>> G = ExponentGroup(2)
    >>> G.exponent([1, Fraction(1, 2)])
    Exponent(1, 1/2)
    """

    __slots__ = ("rank",)

    def __init__(self, rank: int):
        if not isinstance(rank, int) or rank < 1:
            raise StructuralError(f"rank must be a positive integer, got {rank!r}")
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("ExponentGroup is immutable")

    def __eq__(self, other):
        return isinstance(other, ExponentGroup) and self.rank == other.rank

    def __hash__(self):
        return hash(("ExponentGroup", self.rank))

    def __repr__(self):
        return f"ExponentGroup({self.rank})"

    def exponent(self, coords: Iterable) -> Exponent:
        """Build an exponent of this group from rationals (or ints/strings)."""
        e = Exponent(tuple(_as_fraction(c) for c in coords))
        if len(e.coords) != self.rank:
            raise StructuralError(
                f"expected {self.rank} coordinates, got {len(e.coords)}"
            )
        return e

    def zero(self) -> Exponent:
        return Exponent((Q(0),) * self.rank)

    def scalar(self, q) -> Exponent:
        """The exponent (q, 0, ..., 0); rank-1 callers use this for plain rationals."""
        return Exponent((_as_fraction(q),) + (Q(0),) * (self.rank - 1))


@total_ordering
class Exponent:
    """An element of the value group: a tuple of exact rationals.

    Comparison is lexicographic on the first differing coordinate, which is
    exactly how Python compares tuples of Fractions.

    >>> a = Exponent((Fraction(0), Fraction(1)))
    >>> b = Exponent((Fraction(1), Fraction(0)))
    >>> a < b
    True
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[Fraction]):
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Exponent is immutable")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "Exponent"):
        if not isinstance(other, Exponent):
            raise TypeError(f"expected Exponent, got {type(other).__name__}")
        if len(self.coords) != len(other.coords):
            raise StructuralError(
                f"rank mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "Exponent") -> "Exponent":
        self._check(other)
        return Exponent(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Exponent") -> "Exponent":
        self._check(other)
        return Exponent(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Exponent":
        return Exponent(tuple(-a for a in self.coords))

    def scale(self, q) -> "Exponent":
        """Coordinatewise scaling; ``scale(a, 1/n)`` is the unique b with n*b = a."""
        q = _as_fraction(q)
        return Exponent(tuple(a * q for a in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Exponent):
            return NotImplemented
        self._check(other)
        return self.coords == other.coords

    def __lt__(self, other):
        self._check(other)
        return self.coords < other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def cmp(self, other: "Exponent") -> int:
        """-1, 0 or +1 according to lexicographic order."""
        self._check(other)
        if self.coords < other.coords:
            return -1
        if self.coords > other.coords:
            return 1
        return 0

    def __repr__(self):
        return "Exponent(%s)" % ", ".join(str(c) for c in self.coords)


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return a + b


def exp_cmp(a: Exponent, b: Exponent) -> int:
    return a.cmp(b)


def exp_scale(a: Exponent, q) -> Exponent:
    return a.scale(q)
