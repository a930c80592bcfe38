import random

import pytest
from conftest import cyc, gen, path

from lilykernel import (InputError, path_closure,
                        profile, profile_partition, projection,
                        projection_closure, projection_kernel, shadow,
                        verify_projection_kernel)
from lilykernel.generators import random_degenerate
from lilykernel.projections import default_closure_threshold, sp_union


def test_profile_is_canonical_and_distance_correct():
    g = path(5)
    p = profile(g, {0, 4}, 2, 2)
    assert p.entries == ((0, 2), (4, 2))
    assert projection(g, {0, 4}, 2, 1) == set()


def test_profile_rejects_source_in_x():
    with pytest.raises(InputError):
        profile(path(3), {1}, 1, 1)


def test_projection_avoids_x_internally():
    # 0-1-2-3 plus chord 0-3: with X = {1}, vertex 0 reaches 1 directly
    # but may not continue through it, so 2 is only reachable around the
    # chord within radius 2
    g = path(4)
    from lilykernel import from_edges
    g = from_edges(4, g.edges() + [(0, 3)])
    assert projection(g, {1}, 0, 2) == {1}
    assert projection(g, {1, 2}, 0, 2) == {1, 2}


def test_shadow_is_cut_off_part_of_ball():
    g = path(5)
    # from vertex 0 with X = {1}: everything past 1 is shadowed
    assert shadow(g, {1}, 0, 3) == {2, 3}
    assert sp_union(g, {1}, 0, 3) == {1, 2, 3}


def test_profile_partition_groups_twins():
    g = gen("star(5)")
    part = profile_partition(g, {0}, 1)
    assert len(part.classes) == 1
    assert part.classes[0][1] == (1, 2, 3, 4, 5)


def test_projection_closure_contains_input_and_is_idempotent():
    g = gen("grid(3,3)")
    closed = projection_closure(g, {0, 8}, 2)
    assert {0, 8} <= closed
    assert projection_closure(g, closed, 2) == closed


def test_projection_closure_threshold_and_divergence():
    g = gen("star(9)")
    assert default_closure_threshold(g) == 4
    # with threshold 1 the star centre must be absorbed
    assert 0 in projection_closure(g, {1, 2}, 1, threshold=1)
    with pytest.raises(InputError):
        projection_closure(g, {1}, 1, threshold=0)


def test_closure_divergence_guard():
    # a clique forces every remaining vertex into the closure one by one;
    # with a tiny cap stand-in this is simulated via threshold 1 on a
    # graph whose closure terminates anyway, so just check no divergence
    g = cyc(12)
    closed = projection_closure(g, set(range(0, 12, 3)), 2, threshold=1)
    assert closed <= set(g.vertices)


def test_path_closure_restores_short_distances():
    g = cyc(8)
    closed = path_closure(g, {0, 3}, 3)
    sub_vertices = sorted(closed)
    from lilykernel import bfs_distances, induced_subgraph
    sub, to_sub, _ = induced_subgraph(g, sub_vertices)
    assert bfs_distances(sub, [to_sub[0]]).get(to_sub[3]) == 3
    assert path_closure(g, closed, 3) == closed


def test_projection_kernel_small_cases():
    for spec, x, r, c in [("grid(3,3)", {0, 4, 8}, 1, 1),
                          ("cycle(9)", {0, 3, 6}, 2, 2),
                          ("star(8)", {1, 2}, 1, 2),
                          ("spider_forest(2,3,2)", {0, 8}, 2, 1)]:
        g = gen(spec)
        kern = projection_kernel(g, x, r, c)
        report = verify_projection_kernel(g, x, r, c, kern)
        assert report.ok, report.failures
        assert {kern.to_orig[v] for v in kern.core} == set(x)


def test_projection_kernel_random_inputs():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(5, 13)
        g = random_degenerate(n, rng.randint(1, 3), rng.randint(0, 999))
        size = rng.randint(1, max(1, n // 3))
        x = set(rng.sample(range(n), size))
        r = rng.choice((1, 2))
        c = rng.choice((1, 2))
        kern = projection_kernel(g, x, r, c)
        assert verify_projection_kernel(g, x, r, c, kern).ok
