import random

import networkx as nx
import pytest
from hypothesis import given

from pivd.graph import (
    Graph,
    claw_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    net_graph,
    path_graph,
    star_graph,
    tent_graph,
)
from pivd.obstructions import (
    KINDS,
    Obstruction,
    classify,
    enumerate_small_obstructions,
    find_any_hole,
    find_small_obstruction,
    first_small_obstruction,
    is_chordal,
    is_valid_obstruction,
    iter_small_obstructions,
)
from oracles import NET, TENT, induced_patterns, to_nx
from strategies import graphs, unit_interval_graphs


def least(patterns):
    rank = {k: i for i, k in enumerate(KINDS)}
    return min(patterns, key=lambda p: (rank[p[0]], tuple(sorted(p[1]))), default=None)


def test_find_small_examples():
    assert find_small_obstruction(claw_graph()) == Obstruction("claw", frozenset(range(4)))
    c8 = find_small_obstruction(cycle_graph(8))
    assert c8.kind == "hole" and c8.hole_length == 8
    assert find_small_obstruction(cycle_graph(9)) is None
    assert find_small_obstruction(net_graph()).kind == "net"
    assert find_small_obstruction(tent_graph()).kind == "tent"


def test_enumerate_examples():
    assert len(enumerate_small_obstructions(path_graph(6))) == 0
    assert len(enumerate_small_obstructions(claw_graph())) == 1
    fam = enumerate_small_obstructions(star_graph(4))
    assert len(fam) == 4
    assert all(0 in s for s in fam)


def test_enumerate_limit():
    fam = enumerate_small_obstructions(star_graph(6), limit=5)
    assert len(fam) == 5 and fam.truncated
    full = enumerate_small_obstructions(star_graph(6))
    assert len(full) == 20 and not full.truncated


def test_find_any_hole_examples():
    h = find_any_hole(cycle_graph(12), 9)
    assert h.vertices == frozenset(range(12))
    assert find_any_hole(complete_graph(5)) is None
    # C6 0..5 with chord 0-3 splits into two C4s
    g = Graph.from_edges(list(cycle_graph(6).edges()) + [(0, 3)])
    h = find_any_hole(g, 4)
    assert h.hole_length == 4 and is_valid_obstruction(g, h)
    assert h.vertices in ({0, 1, 2, 3}, {0, 3, 4, 5})
    with pytest.raises(ValueError):
        find_any_hole(g, 3)


def test_find_any_hole_respects_min_length():
    g = disjoint_union(cycle_graph(4), cycle_graph(10, start=4))
    assert find_any_hole(g, 9).vertices == frozenset(range(4, 14))
    assert find_any_hole(g, 11) is None


def test_patterns_pairwise_incompatible():
    c6 = nx.cycle_graph(6)
    assert not nx.is_isomorphic(NET, TENT)
    assert not nx.is_isomorphic(NET, c6)
    assert not nx.is_isomorphic(TENT, c6)
    assert classify(net_graph(), range(6)) == "net"
    assert classify(tent_graph(), range(6)) == "tent"
    assert classify(cycle_graph(6), range(6)) == "hole"
    assert classify(complete_graph(6), range(6)) is None


@given(graphs(max_vertices=8))
def test_least_obstruction_matches_brute_force(g):
    expect = least(induced_patterns(g, max_hole=8))
    got = find_small_obstruction(g)
    if expect is None:
        assert got is None
    else:
        assert (got.kind, got.vertices) == expect


@given(graphs(max_vertices=10))
def test_enumeration_matches_brute_force(g):
    expect = induced_patterns(g, max_size=8, max_hole=8)
    got = {(o.kind, o.vertices) for o in iter_small_obstructions(g)}
    if expect and not got:
        # only possible if the graph is proper interval, which the oracle refutes
        pytest.fail("obstructions missed")
    assert got == expect
    assert len({s for _, s in got}) == len(got)
    fam = enumerate_small_obstructions(g)
    assert set(fam.sets) == {s for _, s in expect}


@given(graphs(max_vertices=12))
def test_returned_obstructions_are_valid(g):
    for finder in (find_small_obstruction, first_small_obstruction, find_any_hole):
        obs = finder(g)
        if obs is not None:
            assert is_valid_obstruction(g, obs)


@given(graphs(max_vertices=14))
def test_hole_search_matches_chordality(g):
    hole = find_any_hole(g)
    assert (hole is None) == nx.is_chordal(to_nx(g)) == is_chordal(g)


@given(unit_interval_graphs())
def test_proper_interval_graphs_have_no_obstructions(g):
    assert find_small_obstruction(g) is None
    assert find_any_hole(g) is None
    assert len(enumerate_small_obstructions(g)) == 0


def test_holes_in_larger_random_graphs():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(10, 40)
        g = Graph.from_edges(
            [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 3 / n], vertices=range(n)
        )
        hole = find_any_hole(g)
        assert (hole is None) == nx.is_chordal(to_nx(g))
        if hole is not None:
            assert classify(g, hole.vertices) == "hole"
