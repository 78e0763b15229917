import math
import random
from math import comb

import pytest

from deckforge.deck import compute_deck
from deckforge.degrees import (
    DegreeList,
    DegreeListError,
    degree_list_from_deck,
    degree_profile_sums,
    profile_coefficient,
    solve_degree_list,
    taylor_threshold,
)
from deckforge.graph import complete, cycle, disjoint_union, path, spider, star

from conftest import random_graph


def threshold_float(ell: float) -> float:
    """Plain double-precision evaluation, independent of the mpmath path."""
    L = math.log(ell)
    e = math.e
    return (ell - L + 1) * (e + (e * L + e + 1) / ((ell - 1) * L - 1)) + 1


def test_profile_examples():
    assert degree_profile_sums(compute_deck(cycle(5), 4)) == [0, 10, 10, 0]
    g = spider(2, 2, 1)
    counts = DegreeList.from_degrees(g.degree_list()).counts
    assert degree_profile_sums(compute_deck(g, g.n)) == list(counts)
    assert degree_profile_sums(compute_deck(g, 1)) == [g.n]


def test_profile_identity_exhaustive_random():
    rng = random.Random(0)
    for _ in range(80):
        n = rng.randint(1, 8)
        g = random_graph(rng, n)
        a = DegreeList.from_degrees(g.degree_list()).counts
        for k in range(1, n + 1):
            s = degree_profile_sums(compute_deck(g, k))
            for j in range(k):
                assert s[j] == sum(a[i] * comb(i, j) * comb(n - 1 - i, k - 1 - j) for i in range(n))


def test_profile_coefficient_zero_outside_range():
    assert profile_coefficient(6, 3, 1, 2) == 0
    assert profile_coefficient(6, 3, 5, 2) == comb(5, 2) * comb(0, 0)


def test_solve_examples():
    assert solve_degree_list(compute_deck(cycle(5), 4), {}).degrees == (2, 2, 2, 2, 2)
    assert solve_degree_list(compute_deck(star(3), 3), {3: 1}).degrees == (3, 1, 1, 1)
    assert solve_degree_list(compute_deck(complete(2), 2)).degrees == (1, 1)


def test_solve_detects_wrong_assertions():
    d = compute_deck(star(3), 3)
    # without the high count the profile is consistent with K_3 + K_1
    assert solve_degree_list(d, {}).degrees == (2, 2, 2, 0)
    with pytest.raises(DegreeListError):
        solve_degree_list(d, {3: 2})
    with pytest.raises(DegreeListError):
        solve_degree_list(d, {3: 1, 1: 2})
    with pytest.raises(DegreeListError):
        solve_degree_list(d, {9: 1})


def test_degree_list_from_deck_examples():
    assert degree_list_from_deck(compute_deck(cycle(5), 4)).degrees == (2, 2, 2, 2, 2)
    with pytest.raises(DegreeListError, match="k >= 4"):
        degree_list_from_deck(compute_deck(disjoint_union(cycle(4), path(1)), 3))
    assert degree_list_from_deck(compute_deck(spider(2, 1, 1), 5)).degrees == (3, 2, 1, 1, 1)


def test_degree_list_roundtrip_random():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.4]))
        for k in range(g.max_degree + 2, n + 1):
            assert degree_list_from_deck(compute_deck(g, k)).degrees == g.degree_list()


def test_taylor_threshold():
    with pytest.raises(ValueError):
        taylor_threshold(2)
    with pytest.raises(ValueError):
        taylor_threshold(1)
    assert float(taylor_threshold(10)) == pytest.approx(threshold_float(10), rel=1e-12)
    assert float(taylor_threshold(10)) == pytest.approx(29.0417634900362, abs=1e-10)
    for ell in (3, 4, 25, 100):
        assert float(taylor_threshold(ell)) == pytest.approx(threshold_float(ell), rel=1e-12)
    for ell in (10 ** 3, 10 ** 6):
        assert abs(float(taylor_threshold(ell)) / ell - math.e) / math.e < 0.05


def test_six_vertex_sharpness_trio():
    trio = [disjoint_union(cycle(5), path(1)), spider(2, 2, 1), spider(3, 1, 1)]
    decks = [compute_deck(g, 3) for g in trio]
    assert decks[0] == decks[1] == decks[2]
    # the two spiders share a degree list; only C_5 + P_1 differs
    assert trio[1].degree_list() == trio[2].degree_list() == (3, 2, 2, 1, 1, 1)
    assert trio[0].degree_list() == (2, 2, 2, 2, 2, 0)
