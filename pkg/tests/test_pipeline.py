from __future__ import annotations

import pytest

from mmpts import reference as ref
from mmpts.design import SystemType, classify_type
from mmpts.pipeline import (
    complete_seeds,
    default_method,
    enumerate_designs,
    search_seeds,
)
from mmpts.seeds import small_order_seeds


@pytest.mark.parametrize("v", [7, 9, 10, 11, 12, 13])
def test_direct_counts(v):
    assert enumerate_designs(v).classes == ref.CLASS_COUNTS[v]


def test_methods_by_order():
    assert default_method(14) == "derive"
    assert default_method(16) == "derive"
    assert default_method(15) == "direct"
    assert default_method(12) == "direct"


def test_mmpts11_types():
    res = enumerate_designs(11)
    assert res.type_counts() == {"Q": 1, "N": 1}
    only_q = enumerate_designs(11, type_filter="q")
    assert only_q.classes == 1
    assert classify_type(only_q.designs()[0]) is SystemType.TYPE_Q


def test_derived_and_direct_v10_agree():
    direct = enumerate_designs(10, "direct")
    derived = enumerate_designs(10, "derive")
    assert direct.store.keys() == derived.store.keys()
    assert derived.raw == 8


def test_direct_v14_confirms_the_derived_classes(suite):
    # an independent route to the 787 classes: search at order 14 itself
    direct = enumerate_designs(14, "direct")
    assert direct.classes == 787
    assert direct.store.keys() == suite.corpus(14).store.keys()


def test_engines_and_workers_give_the_same_store():
    base = enumerate_designs(12)
    both = enumerate_designs(12, engine="both", check=True)
    dlx = enumerate_designs(12, engine="dlx", split_depth=2)
    par = enumerate_designs(12, workers=2, split_depth=1)
    for other in (both, dlx, par):
        assert other.store.keys() == base.store.keys()
        assert other.raw == base.raw
        assert other.designs() == base.designs()


def test_per_seed_counts_sum_to_raw():
    raw, per_seed, store = complete_seeds(small_order_seeds(12), split_depth=2)
    assert sum(n for _, n in per_seed) == raw == 440
    assert [name for name, _ in per_seed] == [s.name for s in small_order_seeds(12)]
    assert store.total_hits() == raw


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_designs(11, "derive")
    with pytest.raises(ValueError):
        enumerate_designs(11, "sideways")
    with pytest.raises(ValueError):
        search_seeds(15, "paper")


def test_paper_seed_selection():
    names = [s.name for s in search_seeds(17, "paper", "q")]
    assert names == ["Q1", "Q2", "Q3", "Q4"]
    assert len(search_seeds(17, "paper")) == 9
