from __future__ import annotations

import pytest

from mmpts import reference as ref
from mmpts.canonical import IsoStore, canonical_form
from mmpts.design import Claim, validate
from mmpts.pipeline import complete_seeds
from mmpts.search import build_problem, enumerate_completions
from mmpts.seeds import (
    PAPER_LEAVE,
    Q2_TO_Q2A,
    SEARCH_SEED_NAMES,
    StagedSeed,
    apply_map,
    canonical_leave,
    check_seed_redundancy,
    deepen,
    paper_seeds,
    seed_key,
    small_order_seeds,
    staged_seeds,
    star_completions,
)


def test_canonical_leaves():
    assert canonical_leave(17) == {(0, 1), (0, 3), (1, 2), (2, 3)}
    assert canonical_leave(14) == {(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13)}
    assert canonical_leave(9) == frozenset()
    assert canonical_leave(16) == {(0, 1), (0, 2), (0, 3)} | {(i, i + 1) for i in range(4, 16, 2)}


def test_seed_n1_as_printed():
    n1 = paper_seeds()["N1"]
    want = [
        (0, 2, 4), (1, 3, 5), (0, 5, 6), (0, 7, 8), (0, 9, 10), (0, 11, 12), (0, 13, 14),
        (0, 15, 16), (2, 5, 7), (2, 6, 8), (2, 9, 11), (2, 10, 12), (2, 13, 15), (2, 14, 16),
    ]
    assert n1.fixed_triples == tuple(sorted(want))
    assert n1.leave == PAPER_LEAVE


def test_q1_differs_from_n1_only_in_134():
    seeds = paper_seeds()
    n1, q1 = set(seeds["N1"].fixed_triples), set(seeds["Q1"].fixed_triples)
    assert n1 - q1 == {(1, 3, 5)}
    assert q1 - n1 == {(1, 3, 4)}


def test_ten_seeds_of_fourteen_triples():
    seeds = paper_seeds()
    assert sorted(seeds) == sorted(list(SEARCH_SEED_NAMES) + ["Q2a"])
    for s in seeds.values():
        assert len(s.fixed_triples) == 14
        s.check()


def test_seeds_match_the_row_transcription():
    # the tables transcribed row by row, independently of the column-wise construction
    seeds = paper_seeds()
    for name, triples in ref.seed_table().items():
        assert seeds[name].fixed_triples == tuple(sorted(triples))


def test_q2_maps_onto_q2a():
    seeds = paper_seeds()
    assert apply_map(seeds["Q2"].fixed_triples, Q2_TO_Q2A) == seeds["Q2a"].fixed_triples
    # the map is the permutation (5,13)(6,14)(7,15,10)(8,16,9) and fixes the leave
    assert sorted(Q2_TO_Q2A) == sorted(Q2_TO_Q2A.values())
    assert all(x not in Q2_TO_Q2A for x in range(5))


def test_identity_fixes_n1():
    n1 = paper_seeds()["N1"]
    assert apply_map(n1.fixed_triples, {}) == n1.fixed_triples


def test_redundancy_report():
    report = check_seed_redundancy()
    assert report.ok
    assert report.collisions == [("Q2", "Q2a")]
    keys = [seed_key(paper_seeds()[n]) for n in SEARCH_SEED_NAMES]
    assert len(set(keys)) == 9


def test_seed_key_is_relabelling_invariant():
    q2 = paper_seeds()["Q2"]
    perm = list(range(17))
    perm[5], perm[13] = 13, 5
    moved = type(q2)(17, apply_map(q2.fixed_triples, dict(enumerate(perm))), q2.leave)
    assert seed_key(moved) == seed_key(q2)


@pytest.mark.parametrize("v, classes", [(7, 1), (9, 1), (10, 2), (11, 2), (12, 5), (13, 2)])
def test_small_order_seeds_reach_every_class(v, classes):
    # the 115,200 labelled completions of the single v = 13 seed are cut down by staging
    seeds = staged_seeds(v, 3) if v == 13 else small_order_seeds(v)
    _, _, store = complete_seeds(seeds)
    assert len(store) == classes == ref.CLASS_COUNTS[v]


@pytest.mark.parametrize("v", range(3, 18))
def test_small_order_seeds_are_valid(v):
    for s in small_order_seeds(v):
        s.check()
        assert s.leave == canonical_leave(v)
        assert validate(s.as_design(), Claim.PTS).ok
        # the star of point 0 is complete
        covered = {p for t in s.fixed_triples for p in ((t[0], t[1]), (t[0], t[2]))}
        assert all((0, x) in covered or (0, x) in s.leave for x in range(1, v))


def test_small_order_seeds_range():
    with pytest.raises(ValueError):
        small_order_seeds(18)


def test_every_completion_is_valid():
    for v in (10, 11, 12):
        for s in small_order_seeds(v):
            seen = []
            enumerate_completions(build_problem(s), seen.append)
            assert seen and all(validate(d, Claim.MMPTS).ok for d in seen)


def test_star_completions_cover_the_open_pairs():
    seed = small_order_seeds(11)[0]
    stars = list(star_completions(seed, 5))
    assert stars
    for star in stars:
        assert all(5 in t for t in star)
        pts = sorted(x for t in star for x in t if x != 5)
        assert len(pts) == len(set(pts))


@pytest.mark.parametrize("v, centres", [(12, 2), (12, 3), (13, 3), (11, 3)])
def test_deepening_keeps_the_class_set(v, centres):
    flat = complete_seeds(staged_seeds(v, 2) if v == 13 else small_order_seeds(v))[2]
    deep = complete_seeds(staged_seeds(v, centres))[2]
    assert flat.keys() == deep.keys()


def test_deepened_seeds_are_distinct_partial_designs():
    staged = deepen([StagedSeed(s, (0,)) for s in small_order_seeds(13)], 2)
    keys = {seed_key(s.seed, s.centres) for s in staged}
    assert len(keys) == len(staged)
    assert all(len(s.centres) == 3 for s in staged)


def test_completions_of_the_same_seed_are_deduplicated():
    store = IsoStore()
    for s in small_order_seeds(9):
        enumerate_completions(build_problem(s), lambda d: store.add(canonical_form(d, False)[0].key, d))
    assert len(store) == 1
    assert store.total_hits() == 8
