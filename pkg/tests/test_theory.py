import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordorder.core import ORDERS, role_distance
from wordorder.grammar import Grammar
from wordorder.theory import (SimplexGrid, compositions, expected_distance_argmax,
                              expected_distance_sampling, verify_model, verify_theorem, _SELF_DISTANCE)

U = Grammar((Fraction(1, 6),) * 6)
F = Fraction

rational_grammars = st.lists(st.integers(0, 9), min_size=6, max_size=6).filter(any).map(
    lambda v: Grammar(tuple(F(x, sum(v)) for x in v)))


def one_hot(i):
    return Grammar(tuple(F(int(i == j)) for j in range(6)))


def brute_uniform():
    return sum(F(1, 36) * role_distance(a, b) for a, b in itertools.product(ORDERS, ORDERS))


def test_uniform_sampling():
    assert brute_uniform() == F(2, 3)
    assert expected_distance_sampling(U, U) == F(2, 3)


def test_two_way_split():
    g = Grammar((F(1, 2), F(1, 2), 0, 0, 0, 0))
    # nonzero terms: (SVO,SOV) and (SOV,SVO), each (1/2)(1/2)(2/3)
    assert expected_distance_sampling(g, g) == 2 * F(1, 4) * F(2, 3) == F(1, 3)


def test_vertex_values():
    assert expected_distance_sampling(one_hot(0), one_hot(0)) == 0
    assert expected_distance_argmax(one_hot(3), one_hot(3)) == 0
    assert expected_distance_argmax(U, U) == F(2, 3)
    assert expected_distance_argmax(one_hot(0), one_hot(1)) == F(2, 3)


@given(rational_grammars, rational_grammars)
def test_sampling_symmetric(a, b):
    assert expected_distance_sampling(a, b) == expected_distance_sampling(b, a)


@pytest.mark.parametrize("k", [1, 2, 3, 10])
def test_grid_size(k):
    grid = SimplexGrid(k)
    pts = list(grid)
    assert len(pts) == len(grid) == math.comb(k + 5, 5)
    assert len(set(pts)) == len(pts)
    assert all(sum(g.p) == 1 for g in pts)


def test_compositions_brute_force():
    brute = {c for c in itertools.product(range(5), repeat=6) if sum(c) == 4}
    assert set(compositions(4)) == brute


@pytest.mark.parametrize("k", [2, 4])
def test_integer_path_matches_fraction_path(k):
    grid = SimplexGrid(k)
    for counts, g in zip(grid.counts(), grid):
        assert _SELF_DISTANCE["sampling"](counts, k) == expected_distance_sampling(g, g)
        assert _SELF_DISTANCE["argmax"](counts, k) == expected_distance_argmax(g, g)


def test_zero_only_at_vertices_exhaustive():
    for g in SimplexGrid(5):
        assert (expected_distance_sampling(g, g) == 0) == g.is_one_hot
        assert (expected_distance_argmax(g, g) == 0) == g.is_one_hot


def test_verify_resolution_10():
    sampling, argmax = verify_theorem(10)
    for r in (sampling, argmax):
        assert r.passed and r.grid_size == 3003 and len(r.zero_set) == 6
    assert sampling.min_nonzero_value == F(3, 25) == 2 * F(1, 10) * F(9, 10) * F(2, 3)
    assert argmax.min_nonzero_value == F(1, 15)


def test_verify_resolution_2():
    for r in verify_theorem(2):
        assert r.passed and r.grid_size == 21 and len(r.zero_set) == 6


def test_report_json():
    r = verify_model(3, "sampling").to_json()
    assert set(r) == {"model", "resolution", "grid_size", "zero_set", "min_nonzero_value", "pass"}
    assert r["pass"] is True and r["grid_size"] == 56


def test_verify_rejects_coarse_grid():
    with pytest.raises(ValueError):
        verify_theorem(1)
