import pytest

from lilykernel import InputError
from lilykernel.generators import (GeneratorSpec, cycle, generate, grid,
                                   parse_spec, random_degenerate,
                                   spider_forest, star)
from lilykernel.graph import bfs_distances, degeneracy


def test_grid_2x2_is_c4():
    g = grid(2, 2)
    assert g.n == 4 and g.m == 4
    assert all(g.degree(v) == 2 for v in g.vertices)


def test_cycle_and_star_shapes():
    assert cycle(7).m == 7
    s = star(6)
    assert s.degree(0) == 6 and all(s.degree(v) == 1 for v in range(1, 7))


def test_spider_forest_components():
    g = spider_forest(3, 4, 2)
    assert g.n == 27
    comp = bfs_distances(g, [0])
    assert len(comp) == 9  # one component of 9 vertices


def test_random_degenerate_is_deterministic_and_degenerate():
    a = random_degenerate(20, 2, 5)
    b = random_degenerate(20, 2, 5)
    assert a == b
    assert degeneracy(a) <= 2
    assert random_degenerate(20, 2, 6) != a


def test_parse_spec_round_trip_and_seed():
    spec = parse_spec("random_degenerate(10,2)", seed=3)
    assert spec.params == (10, 2) and spec.seed == 3
    assert generate(spec) == random_degenerate(10, 2, 3)
    assert str(parse_spec("grid(3, 4)")) == "grid(3,4)"


def test_bad_specs_rejected():
    with pytest.raises(InputError):
        parse_spec("grid[3,3]")
    with pytest.raises(InputError):
        GeneratorSpec("hexagon", (3,))
    with pytest.raises(InputError):
        generate(parse_spec("grid(3)"))
    with pytest.raises(InputError):
        grid(0, 3)
    with pytest.raises(InputError):
        cycle(2)
