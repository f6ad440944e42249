from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from lozenge.gtp import (PatternShapeError, count_formula, count_recursive, enumerate_patterns,
                         pattern_from_json, pattern_to_json, validate_pattern)

ROWWISE = ((4,), (2, 6))
HEX_UPPER = ((4,), (2, 6), (1, 4, 7), (1, 3, 6, 8))
HEX_LOWER = ((3,), (3, 6), (2, 5, 7), (1, 3, 6, 8))


def all_patterns_naive(bottom):
    """Every triangular array over 1..max(bottom) ending in ``bottom`` that validates."""
    n, top = len(bottom), bottom[-1]
    rows = [list(combinations(range(1, top + 1), i)) for i in range(1, n)]
    found = []
    for choice in product(*rows):
        candidate = choice + (tuple(bottom),)
        if validate_pattern(candidate):
            found.append(candidate)
    return found


@pytest.mark.parametrize("pattern", [ROWWISE, HEX_UPPER, HEX_LOWER])
def test_worked_patterns_validate(pattern):
    assert validate_pattern(pattern)


@pytest.mark.parametrize("pattern", [
    ((5,), (2, 4)),
    ((2,), (2, 2)),
    ((1,), (2, 6)),
    ((0,), (0, 6)),
])
def test_invalid_patterns(pattern):
    assert not validate_pattern(pattern)


def test_shape_errors_are_distinct():
    with pytest.raises(PatternShapeError):
        validate_pattern(((4,), (2, 6, 7)))
    with pytest.raises(PatternShapeError):
        validate_pattern(())


@pytest.mark.parametrize("u, expected", [
    ([4], 1),
    ([1, 2, 3, 4, 5], 1),
    ([2, 6], 4),
    ([1, 3, 6, 8], 175),
])
def test_counts(u, expected):
    assert count_formula(u) == expected
    assert count_recursive(u) == expected


def test_175_from_naive_enumeration():
    assert len(all_patterns_naive((1, 3, 6, 8))) == 175


def test_empty_bottom_row_rejected():
    for f in (count_formula, count_recursive):
        with pytest.raises(ValueError):
            f([])
    with pytest.raises(ValueError):
        list(enumerate_patterns([]))


def test_enumerate_small():
    assert list(enumerate_patterns([4])) == [((4,),)]
    assert list(enumerate_patterns([2, 6])) == [((2,), (2, 6)), ((3,), (2, 6)),
                                                ((4,), (2, 6)), ((5,), (2, 6))]


def test_enumeration_matches_naive_search():
    for k in range(1, 5):
        for u in combinations(range(1, 7), k):
            assert list(enumerate_patterns(u)) == sorted(all_patterns_naive(u))


def test_enumeration_is_lexicographic_and_valid():
    patterns = list(enumerate_patterns([1, 3, 6, 8]))
    assert len(patterns) == 175
    assert patterns == sorted(patterns)
    assert len(set(patterns)) == 175
    assert all(validate_pattern(p) and p[-1] == (1, 3, 6, 8) for p in patterns)
    assert HEX_UPPER in patterns and HEX_LOWER in patterns


def test_exhaustive_agreement_up_to_eight():
    for k in range(1, 6):
        for u in combinations(range(1, 9), k):
            n = sum(1 for _ in enumerate_patterns(u))
            assert count_formula(u) == count_recursive(u) == n, u


bottoms = st.sets(st.integers(1, 25), min_size=1, max_size=7).map(sorted)


@given(bottoms, st.integers(0, 50))
def test_translation_invariance(u, t):
    assert count_formula([x + t for x in u]) == count_formula(u)


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(1, 14), min_size=1, max_size=6).map(sorted))
def test_formula_equals_recursion(u):
    assert count_formula(u) == count_recursive(u) >= 1


def test_json_roundtrip():
    assert pattern_to_json(HEX_UPPER) == [[4], [2, 6], [1, 4, 7], [1, 3, 6, 8]]
    assert pattern_from_json([[4], [2, 6], [1, 4, 7], [1, 3, 6, 8]]) == HEX_UPPER
    with pytest.raises(PatternShapeError):
        pattern_from_json([[4, 5]])
