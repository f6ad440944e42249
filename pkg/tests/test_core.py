from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from lozenge.core import (RowSet, pair_product, ratio_from_json, ratio_to_json, set_algebra,
                          superfactorial)
from math import factorial


def brute_pairs(a, b):
    out = 1
    for x in a:
        for y in b:
            if x < y:
                out *= y - x
    return out


rowsets = st.sets(st.integers(1, 12), max_size=6).map(RowSet)


def test_rowset_sorts_and_rejects_duplicates():
    assert RowSet([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(ValueError):
        RowSet([1, 1])
    with pytest.raises(ValueError):
        RowSet([0, 2])
    with pytest.raises(TypeError):
        RowSet([1.5])
    assert RowSet() == ()


def test_rowset_json():
    assert RowSet([8, 1, 6, 3]).to_json() == [1, 3, 6, 8]
    assert RowSet.from_json([1, 3]) == RowSet([1, 3])
    with pytest.raises(ValueError):
        RowSet.from_json("1,3")


@pytest.mark.parametrize("a, b, expected", [
    ([], [5, 9], 1),
    ([2], [1], 1),
    ([1], [2, 3], 2),
])
def test_pair_product_examples(a, b, expected):
    assert pair_product(a, b) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 12), (5, 288)])
def test_superfactorial(n, expected):
    assert superfactorial(n) == expected


def test_superfactorial_rejects_zero():
    with pytest.raises(ValueError):
        superfactorial(0)


def test_superfactorial_step():
    for n in range(1, 30):
        assert superfactorial(n + 1) == superfactorial(n) * factorial(n)


def test_superfactorial_divides_2100():
    # P({1,3,6,8}, {1,3,6,8}) = 2*5*7*3*5*2
    assert pair_product([1, 3, 6, 8], [1, 3, 6, 8]) == 2100
    assert 2100 // superfactorial(4) == 175


@pytest.mark.parametrize("u, l, c, ubar, lbar", [
    ([1, 3], [2, 3], [3], [1], [2]),
    ([4, 7], [4, 7], [4, 7], [], []),
    ([1, 2, 4, 5, 8, 10, 11, 14], [1, 4, 9, 10, 11, 12, 14],
     [1, 4, 10, 11, 14], [2, 5, 8], [9, 12]),
])
def test_set_algebra(u, l, c, ubar, lbar):
    assert set_algebra(u, l) == (RowSet(c), RowSet(ubar), RowSet(lbar))


def test_pair_product_splits_over_common_part():
    positions = range(1, 9)
    for k in range(9):
        for u in combinations(positions, k):
            for j in range(len(u) + 1):
                for c in combinations(u, j):
                    ubar = [x for x in u if x not in c]
                    assert pair_product(u, u) == (pair_product(ubar, ubar) * pair_product(ubar, c)
                                                  * pair_product(c, ubar) * pair_product(c, c))


@given(rowsets, rowsets)
def test_pair_product_matches_brute_force(a, b):
    assert pair_product(a, b) == brute_pairs(a, b)


@given(rowsets, rowsets)
def test_disjoint_products_cover_every_pair(a, b):
    b = b - a
    expected = 1
    for x in a:
        for y in b:
            expected *= abs(x - y)
    assert pair_product(a, b) * pair_product(b, a) == expected


@given(rowsets, rowsets)
def test_rowset_operators_match_sets(a, b):
    assert set(a & b) == set(a) & set(b)
    assert set(a | b) == set(a) | set(b)
    assert set(a - b) == set(a) - set(b)
    for r in (a & b, a | b, a - b):
        assert list(r) == sorted(r)


def test_ratio_json_roundtrip():
    assert ratio_to_json(Fraction(2)) == "2/1"
    assert ratio_to_json(Fraction(6, 4)) == "3/2"
    assert ratio_from_json("3/2") == Fraction(3, 2)
