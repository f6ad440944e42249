"""Exact arithmetic helpers and row sets.

Every count in the package is a plain Python ``int`` (arbitrary precision) and
every ratio a :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

ExactCount = int
ExactRatio = Fraction


class RowSet(tuple):
    """Strictly increasing tuple of positive integer positions.

    Input may come in any order but duplicates are rejected, not dropped.
    ``&``, ``|`` and ``-`` behave like the set operations and return RowSets.
    """

    __slots__ = ()

    def __new__(cls, positions: Iterable[int] = ()) -> "RowSet":
        items = sorted(positions)
        if len(set(items)) != len(items):
            dup = next(a for a, b in zip(items, items[1:]) if a == b)
            raise ValueError(f"duplicate position {dup} in row set")
        for p in items:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"positions must be integers, got {p!r}")
        if items and items[0] < 1:
            raise ValueError(f"positions must be >= 1, got {items[0]}")
        return super().__new__(cls, items)

    @classmethod
    def _trusted(cls, items: Iterable[int]) -> "RowSet":
        # items already sorted, unique and positive
        return tuple.__new__(cls, items)

    def __and__(self, other: Iterable[int]) -> "RowSet":
        other = set(other)
        return RowSet._trusted([p for p in self if p in other])

    def __or__(self, other: Iterable[int]) -> "RowSet":
        if isinstance(other, RowSet):
            return RowSet._trusted(sorted(set(self).union(other)))
        return RowSet(set(self) | set(other))

    def __sub__(self, other: Iterable[int]) -> "RowSet":
        other = set(other)
        return RowSet._trusted([p for p in self if p not in other])

    def __repr__(self) -> str:
        return "RowSet({" + ", ".join(map(str, self)) + "})"

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "RowSet":
        if not isinstance(data, list):
            raise ValueError(f"row set must be a JSON array, got {data!r}")
        return cls(data)


def as_rowset(positions: Iterable[int]) -> RowSet:
    return positions if isinstance(positions, RowSet) else RowSet(positions)


def pair_product(a: Iterable[int], b: Iterable[int]) -> ExactCount:
    """Product of ``y - x`` over all ``x`` in ``a``, ``y`` in ``b`` with ``x < y``.

    The empty product is 1.
    """
    b = tuple(b)
    result = 1
    for x in a:
        for y in b:
            if x < y:
                result *= y - x
    return result


@lru_cache(maxsize=None)
def superfactorial(n: int) -> ExactCount:
    """Return ``1! * 2! * ... * (n-1)!``; ``superfactorial(1) == 1``."""
    if n < 1:
        raise ValueError(f"superfactorial needs n >= 1, got {n}")
    result = 1
    for k in range(2, n):
        result *= factorial(k)
    return result


def set_algebra(u: Iterable[int], l: Iterable[int]) -> tuple[RowSet, RowSet, RowSet]:
    """Split two bottom rows into ``(common, u_only, l_only)``."""
    u, l = as_rowset(u), as_rowset(l)
    us, ls = set(u), set(l)
    return (RowSet._trusted([p for p in u if p in ls]),
            RowSet._trusted([p for p in u if p not in ls]),
            RowSet._trusted([p for p in l if p not in us]))


def exact_div(num: int, den: int) -> ExactCount:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def count_to_json(value: ExactCount) -> str:
    return str(value)


def ratio_to_json(value: ExactRatio) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def ratio_from_json(text: str) -> ExactRatio:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))
