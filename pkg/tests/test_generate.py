import random

from hypothesis import given
from hypothesis import strategies as st

from pivd.generate import (
    big_clique_instance,
    generate_instance,
    long_cycle_instance,
    star_instance,
    unit_interval_graph,
)
from pivd.graph import delete_vertices
from pivd.recognition import is_proper_interval
from pivd.solver import solve


@given(st.integers(1, 60), st.integers(0, 10**6))
def test_no_noise_is_proper_interval(n, seed):
    inst = generate_instance(n, 0, seed)
    assert inst.k == 0 and len(inst.graph) == n
    assert is_proper_interval(inst.graph)
    assert solve(inst.graph, 0).deletion_set == frozenset()


@given(st.integers(1, 60), st.integers(0, 4), st.integers(0, 10**6))
def test_noise_set_is_a_witness(n, k, seed):
    inst = generate_instance(n, k, seed)
    assert inst.k == k
    assert is_proper_interval(delete_vertices(inst.graph, range(n, n + k)))


def test_determinism_and_example():
    assert generate_instance(40, 3, 9) == generate_instance(40, 3, 9)
    inst = generate_instance(50, 2, seed=17)
    assert solve(inst.graph, 2).feasible


def test_unit_interval_ids_are_shuffled():
    g = unit_interval_graph(30, random.Random(0))
    assert g.vertices == tuple(range(30))
    assert is_proper_interval(g)


def test_rule_builders_are_deterministic():
    for build in (big_clique_instance, star_instance, long_cycle_instance):
        assert build(random.Random(8)) == build(random.Random(8))
