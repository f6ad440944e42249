"""Gelfand-Tsetlin patterns with a prescribed bottom row.

A pattern is a triangular array whose row ``i`` (counted from the top, 1-based)
holds ``i`` strictly increasing positive integers, and consecutive rows
interlace::

    u[i][1] <= u[i-1][1] < u[i][2] <= u[i-1][2] < ... <= u[i-1][i-1] < u[i][i]

Patterns are handled as tuples of tuples, top row first.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import ExactCount, RowSet, as_rowset, exact_div, pair_product, superfactorial

GTPattern = tuple[tuple[int, ...], ...]


class PatternShapeError(ValueError):
    """Raised when a candidate pattern is not triangular."""


def _check_shape(rows: Sequence[Sequence[int]]) -> None:
    if len(rows) == 0:
        raise PatternShapeError("pattern has no rows")
    for i, row in enumerate(rows, start=1):
        if len(row) != i:
            raise PatternShapeError(f"row {i} has {len(row)} entries, expected {i}")


def interlaces(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """True if ``upper`` (length k) sits between ``lower`` (length k+1)."""
    if len(lower) != len(upper) + 1:
        return False
    for j, x in enumerate(upper):
        if not lower[j] <= x < lower[j + 1]:
            return False
    return True


def validate_pattern(rows: Sequence[Sequence[int]]) -> bool:
    """Check positivity, strict rows and interlacing.

    Shape problems raise :class:`PatternShapeError`; every other defect
    returns ``False``.
    """
    _check_shape(rows)
    for row in rows:
        if any(x < 1 for x in row):
            return False
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    return all(interlaces(rows[i - 1], rows[i]) for i in range(1, len(rows)))


def _nonempty(u: Iterable[int]) -> RowSet:
    u = as_rowset(u)
    if not u:
        raise ValueError("bottom row must be nonempty")
    return u


def count_formula(u: Iterable[int]) -> ExactCount:
    """Number of patterns with bottom row ``u`` from the product formula.

    Computed as ``pair_product(u, u) // superfactorial(len(u))``; a nonzero
    remainder would mean a bug, so it raises.
    """
    u = _nonempty(u)
    return exact_div(pair_product(u, u), superfactorial(len(u)))


def _rows_above(row: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # all rows w with row[j] <= w[j] < row[j+1]
    return product(*(range(row[j], row[j + 1]) for j in range(len(row) - 1)))


@lru_cache(maxsize=None)
def _count_normalized(row: tuple[int, ...]) -> int:
    if len(row) == 1:
        return 1
    total = 0
    for above in _rows_above(row):
        base = above[0]
        total += _count_normalized(tuple(x - base for x in above))
    return total


def count_recursive(u: Iterable[int]) -> ExactCount:
    """Number of patterns with bottom row ``u`` by summing over the row above.

    Subproblems are memoized on the row shifted to start at 0, since the
    count only depends on differences.
    """
    u = _nonempty(u)
    return _count_normalized(tuple(x - u[0] for x in u))


def _row_bounds(bottom: RowSet, i: int) -> list[tuple[int, int]]:
    # entry j of row i must lie in [bottom[j], bottom[j + n - i] - (n - i)]
    n = len(bottom)
    return [(bottom[j], bottom[j + n - i] - (n - i)) for j in range(i)]


def _rows_below(row: Sequence[int], bounds: list[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    k = len(row)
    ranges = []
    for j in range(k + 1):
        lo, hi = bounds[j]
        if j > 0:
            lo = max(lo, row[j - 1] + 1)
        if j < k:
            hi = min(hi, row[j])
        if lo > hi:
            return iter(())
        ranges.append(range(lo, hi + 1))
    return product(*ranges)


def enumerate_patterns(u: Iterable[int]) -> Iterator[GTPattern]:
    """Yield every pattern with bottom row ``u`` exactly once.

    Patterns come out in lexicographic order of their rows read top row
    first. The output is exponential in ``len(u)``.
    """
    u = _nonempty(u)
    n = len(u)
    bounds = [None] + [_row_bounds(u, i) for i in range(1, n + 1)]

    def extend(rows: list[tuple[int, ...]]) -> Iterator[GTPattern]:
        i = len(rows)
        if i == n:
            if rows[-1] == tuple(u):
                yield tuple(rows)
            return
        for nxt in _rows_below(rows[-1], bounds[i + 1]):
            rows.append(nxt)
            yield from extend(rows)
            rows.pop()

    lo, hi = bounds[1][0]
    for top in range(lo, hi + 1):
        yield from extend([(top,)])


def pattern_to_json(pattern: GTPattern) -> list[list[int]]:
    return [list(row) for row in pattern]


def pattern_from_json(data) -> GTPattern:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("pattern must be a JSON array of arrays")
    rows = tuple(tuple(int(x) for x in r) for r in data)
    _check_shape(rows)
    return rows
