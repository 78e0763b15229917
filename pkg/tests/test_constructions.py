import random

import pytest

from deckforge.constructions import (
    FAMILIES,
    FamilyError,
    FamilySpec,
    max_degree_pair,
    same_deck_pair,
    verify_construction,
)
from deckforge.deck import compute_deck, decks_equal
from deckforge.graph import (
    canonical_form,
    cycle,
    disjoint_union,
    empty_graph,
    is_isomorphic,
    path,
    spider,
    star,
    star_forest,
)
from deckforge.graph6 import write_graph6

from conftest import random_graph
from oracles import nx_deck, nx_decks_equal


def test_unknown_family():
    with pytest.raises(FamilyError):
        FamilySpec("nope", ())


def test_spider_pair_example():
    g, h, k = same_deck_pair(FamilySpec("spider_pair", (4,)))
    assert k == 4 and g.n == h.n == 8
    assert is_isomorphic(g, spider(3, 3, 1)) and is_isomorphic(h, spider(4, 2, 1))


def test_path_shift_example():
    g, h, k = same_deck_pair(FamilySpec("path_shift", (3, 3, 4)))
    assert k == 3
    assert is_isomorphic(g, disjoint_union(path(2), path(4)))
    assert is_isomorphic(h, disjoint_union(path(3), path(3)))


def test_star_forest_example():
    spec = FamilySpec("manvel_stars", (3,))
    g, h, k = same_deck_pair(spec)
    assert k == 3 and g.n == h.n == 10
    assert is_isomorphic(g, star_forest([3, 1, 1, 1]))
    assert is_isomorphic(h, star_forest([2, 2, 2, 0]))
    assert max_degree_pair(spec) == (3, 2)
    for k in range(2, 6):
        g, h, _ = same_deck_pair(FamilySpec("manvel_stars", (k,)))
        assert g.n == h.n == (k + 2) * 2 ** (k - 2)


def test_multipartite_tally():
    v = verify_construction(FamilySpec("erpart_pair"))
    assert v and v.k == 3
    assert v.tally == {"Bw": 84, "BW": 240, "B?": 40}


def test_cycle_split_example():
    v = verify_construction(FamilySpec("cycle_split", (3, 4, 4)))
    assert v


def test_bound_violation_accepted_by_verify_only():
    spec = FamilySpec("path_shift", (4, 3, 4))
    with pytest.raises(FamilyError):
        same_deck_pair(spec)
    v = verify_construction(spec)
    assert not v and "differ" in v.reason


@pytest.mark.parametrize("spec", [
    FamilySpec("cycle_split", (3, 3, 4)),
    FamilySpec("cycle_path", (3, 3, 2)),
    FamilySpec("path_shift", (3, 3, 3)),
    FamilySpec("spider_pair", (2,)),
    FamilySpec("cycle_vs_spider", (1, 1, 1)),
    FamilySpec("manvel_stars", (6,)),
    FamilySpec("path_vs_cycle_path", (1,)),
    FamilySpec("myrvold_common", (1,)),
    FamilySpec("maxdeg2_general", (3, 5, 0, -5)),
    FamilySpec("maxdeg2_general", (3, 8, 0, 8)),
    FamilySpec("cycle_split", (3, 4)),
])
def test_same_deck_pair_rejects(spec):
    with pytest.raises(FamilyError):
        same_deck_pair(spec)


def test_bounds_are_sharp_at_sample_points():
    # one below the bound the claim fails for these instances
    assert not verify_construction(FamilySpec("cycle_split", (3, 3, 4)))
    assert not verify_construction(FamilySpec("cycle_path", (3, 3, 3)))
    assert not verify_construction(FamilySpec("spider_pair", (2,)))


def test_all_deck_families_sweep_up_to_14_vertices():
    checked = 0
    for fam in ("cycle_split", "cycle_path", "path_shift"):
        for k in range(1, 8):
            for q in range(1, 15):
                for r in range(1, 15):
                    spec = FamilySpec(fam, (k, q, r))
                    try:
                        g, _, _ = same_deck_pair(spec)
                    except FamilyError:
                        continue
                    if g.n <= 14:
                        checked += 1
                        assert verify_construction(spec), spec
    for k in range(3, 8):
        assert verify_construction(FamilySpec("spider_pair", (k,)))
    for t in range(4, 14):
        for a in range(1, t):
            for b in range(1, t - a):
                assert verify_construction(FamilySpec("cycle_vs_spider", (a, b, t - a - b)))
    for ell in range(2, 8):
        assert verify_construction(FamilySpec("path_vs_cycle_path", (ell,)))
    for k in (2, 3, 4):
        assert verify_construction(FamilySpec("manvel_stars", (k,)))
    assert verify_construction(FamilySpec("maxdeg2_general", (3, 4, 4, -5, 0, 8, -5)))
    assert checked > 100


def test_myrvold_common_cards():
    for t in range(2, 6):
        v = verify_construction(FamilySpec("myrvold_common", (t,)))
        assert v and sum(v.tally.values()) == t + 1


def test_small_pairs_with_networkx_oracle():
    g, h, k = same_deck_pair(FamilySpec("spider_pair", (3,)))
    assert nx_decks_equal(nx_deck(g, k), nx_deck(h, k))
    g, h, k = same_deck_pair(FamilySpec("cycle_vs_spider", (2, 1, 1)))
    assert nx_decks_equal(nx_deck(g, k), nx_deck(h, k))


def test_same_deck_closed_under_common_extension():
    rng = random.Random(0)
    pairs = [same_deck_pair(FamilySpec("cycle_vs_spider", (2, 1, 1))),
             same_deck_pair(FamilySpec("spider_pair", (3,))),
             same_deck_pair(FamilySpec("path_shift", (2, 2, 3)))]
    for g, g2, k in pairs:
        for _ in range(5):
            extra = random_graph(rng, rng.randint(1, 12 - g.n))
            assert decks_equal(compute_deck(disjoint_union(g, extra), k), compute_deck(disjoint_union(g2, extra), k))


def test_every_family_builds():
    samples = {
        "cycle_split": (3, 4, 5), "cycle_path": (3, 4, 2), "path_shift": (3, 3, 4),
        "maxdeg2_general": (2, 6, 0, 3, 3), "spider_pair": (3,), "cycle_vs_spider": (2, 1, 1),
        "manvel_stars": (2,), "erpart_pair": (), "path_vs_cycle_path": (3,), "myrvold_common": (3,),
    }
    assert set(samples) == set(FAMILIES)
    for fam, params in samples.items():
        g, h, k = same_deck_pair(FamilySpec(fam, params))
        assert g.n == h.n and canonical_form(g) != canonical_form(h)
        assert write_graph6(g) and write_graph6(h)


def test_maxdeg2_random_instances():
    """Random pairs of long-enough cycle/path mixtures with equal orders and sizes."""
    rng = random.Random(1)
    done = 0
    while done < 40:
        k = rng.randint(2, 4)

        def parts():
            out = []
            for _ in range(rng.randint(1, 3)):
                out.append(rng.randint(k + 1, k + 5) if rng.random() < 0.5 else -rng.randint(k - 1 if k > 1 else 1, k + 4))
            return out

        g, h = parts(), parts()
        spec = FamilySpec("maxdeg2_general", tuple([k] + g + [0] + h))
        try:
            a, b, _ = same_deck_pair(spec)
        except FamilyError:
            continue
        if a.n > 14:
            continue
        done += 1
        assert verify_construction(spec), spec
