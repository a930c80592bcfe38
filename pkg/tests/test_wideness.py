import pytest
from conftest import cyc, gen, path

from lilykernel import (InputError, WaterLily, find_sigma_uniform_lily,
                        find_uniform_lily, pad_signature, uqw, verify_lily)
from lilykernel.graph import bfs_distances


def test_water_lily_validation():
    with pytest.raises(InputError):
        WaterLily(frozenset({0}), (1, 2), radius=1, depth=2, adhesion=1)
    with pytest.raises(InputError):
        WaterLily(frozenset({0}), (2, 1), radius=2, depth=1, adhesion=1)


def test_verify_lily_on_hand_built_star():
    g = gen("star(6)")
    lily = WaterLily(frozenset({0}), (1, 2, 3), radius=1, depth=1, adhesion=1)
    report = verify_lily(g, lily)
    assert report.ok and not report.empty


def test_verify_lily_rejects_close_centres():
    g = path(5)
    lily = WaterLily(frozenset(), (0, 1), radius=1, depth=1, adhesion=0)
    report = verify_lily(g, lily)
    assert not report.scattered_ok and not report.ok


def test_verify_lily_flags_empty():
    report = verify_lily(path(3), WaterLily(frozenset({0}), (), 1, 1, 1))
    assert report.ok and report.empty


def test_uqw_separates():
    g = gen("star(10)")
    res = uqw(g, range(1, 11), separation=2, t=5)
    assert res is not None
    assert len(res.spread) >= 5
    for i, u in enumerate(res.spread):
        near = bfs_distances(g, [u], radius=2, forbidden=res.separator)
        assert not any(v in near for v in res.spread[i + 1:])


def test_uqw_gives_up_within_budget():
    g = cyc(6)
    assert uqw(g, range(6), separation=6, t=4, max_separator=2) is None


def test_find_uniform_lily_on_spiders():
    g = gen("spider_forest(1,8,1)")
    lily = find_uniform_lily(g, list(g.vertices), 1, 1, 1, 2)
    assert lily is not None
    assert len(lily.centres) >= 2
    assert verify_lily(g, lily).ok


def test_find_uniform_lily_matches_leg_length():
    g = gen("spider_forest(2,6,2)")
    lily = find_uniform_lily(g, list(g.vertices), 2, 2, 1, 2)
    assert lily is not None
    assert verify_lily(g, lily).ok
    assert len(lily.centres) >= 2 * len(lily.roots)


def test_find_uniform_lily_returns_none_when_impossible():
    assert find_uniform_lily(path(3), [0, 1, 2], 1, 1, 1, 3) is None


def test_pad_signature_distinguishes_labels():
    g = gen("star(4)")
    roots = frozenset({0})
    plain = pad_signature(g, roots, 1, 1, 1)
    labelled = pad_signature(g, roots, 1, 1, 1, labelling=lambda v: "L")
    assert plain != labelled


def test_sigma_uniform_lily_centres_share_signature():
    g = gen("spider_forest(1,10,1)")
    found = find_sigma_uniform_lily(g, list(g.vertices), 1, 1, 1, 2)
    assert found is not None
    lily = found.lily
    assert verify_lily(g, lily).ok
    sigs = {pad_signature(g, lily.roots, lily.radius, lily.depth, u)
            for u in lily.centres}
    assert sigs == {found.signature}
