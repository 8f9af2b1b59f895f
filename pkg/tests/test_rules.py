import random

import pytest

from pivd.generate import big_clique_instance, generate_instance, star_instance
from pivd.graph import (
    Graph,
    claw_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    path_graph,
)
from pivd.hitting_set import SetFamily
from pivd.obstructions import iter_claws
from pivd.recognition import clique_path, is_proper_interval, proper_interval_ordering
from pivd.rules import (
    NO,
    Instance,
    Modulator,
    build_modulator,
    delta,
    epsilon,
    forced_vertices,
    irrelevant_vertex,
    kernel_size_bound,
    kernelize,
    run_length,
    shrink_clique_path,
    t_component_degree,
    trivial_no_instance,
    zeta,
)
from pivd.solver import solve
from oracles import step_instances


def feasible(inst):
    return solve(inst.graph, inst.k).feasible


def bare_modulator(t):
    t = frozenset(t)
    return Modulator(t, SetFamily(), t)


def test_bound_functions():
    assert delta(0) == 8 * 40320
    assert delta(1) == 8 * 40320 * 256 + 1
    assert epsilon(1, 0) == 4
    assert epsilon(2) == 3 * (delta(2) + 2)
    assert run_length(2) == 75
    assert zeta(0, 2) == 75
    assert zeta(1, 2) == 19 * 75
    assert kernel_size_bound(0) == 0
    assert kernel_size_bound(1) > 10**20


def test_instance_rejects_negative_budget():
    with pytest.raises(ValueError):
        Instance(path_graph(2), -1)


def test_modulator_examples():
    mod = build_modulator(Instance(path_graph(6), 2))
    assert mod.t == frozenset() and len(mod.reduced_family) == 0
    g = disjoint_union(claw_graph(), path_graph(3, start=4))
    mod = build_modulator(Instance(g, 1))
    assert mod.t == {0, 1, 2, 3}
    assert mod.circ_deletion == frozenset()
    assert build_modulator(Instance(cycle_graph(20), 0)) is NO


def test_modulator_invariants_on_generated_instances():
    for seed in range(40):
        inst = generate_instance(30, 3, seed)
        mod = build_modulator(inst)
        assert mod is not NO
        assert is_proper_interval(delete_vertices(inst.graph, mod.t))
        assert mod.t == mod.reduced_family.union() | mod.circ_deletion
        assert len(mod.t) <= 8 * len(mod.reduced_family) + inst.k <= delta(inst.k)


def test_irrelevant_vertex_threshold():
    k5 = Instance(complete_graph(5), 1)
    v = irrelevant_vertex(k5, build_modulator(k5))
    assert v in range(5)
    assert feasible(k5) == feasible(Instance(delete_vertices(k5.graph, {v}), 1))
    k4 = Instance(complete_graph(4), 1)
    assert irrelevant_vertex(k4, build_modulator(k4)) is None


def test_irrelevant_vertex_is_unmarked():
    # vertex 17 sees clique vertices 0..5 and two private leaves, giving claws;
    # the modulator takes it, both leaves and two clique vertices
    size, t, a, b = 17, 17, 18, 19
    edges = list(complete_graph(size).edges()) + [(t, a), (t, b)] + [(t, c) for c in range(6)]
    inst = Instance(Graph.from_edges(edges), 1)
    mod = build_modulator(inst)
    assert t in mod.t and len(mod.t) == 5
    outside = delete_vertices(inst.graph, mod.t)
    clique = sorted(outside.vertices)
    assert len(clique) == epsilon(1, len(mod.t)) + 1
    v = irrelevant_vertex(inst, mod)
    sigma = proper_interval_ordering(outside)
    marked = set(sigma.order[:2]) | set(sigma.order[-2:])
    for x in mod.t:
        marked |= set(sorted(inst.graph.neighbors(x) & set(clique))[:2])
    assert v is not None and v not in marked
    assert v == min(set(clique) - marked)
    assert feasible(inst) == feasible(Instance(delete_vertices(inst.graph, {v}), 1))


def test_irrelevant_vertex_rejects_bad_modulator():
    with pytest.raises(ValueError):
        irrelevant_vertex(Instance(claw_graph(), 1), bare_modulator(()))


def test_forced_vertices_examples():
    inst = Instance(claw_graph(), 1)
    forced = forced_vertices(inst, bare_modulator({0}))
    assert forced == {0}
    assert feasible(inst) == feasible(Instance(delete_vertices(inst.graph, forced), 0))
    assert forced_vertices(inst, bare_modulator({0, 1, 2, 3})) == frozenset()
    assert forced_vertices(Instance(claw_graph(), 0), bare_modulator({0})) is NO


def test_shrink_clique_path_examples():
    n = 2 * 75 + 2
    inst = Instance(path_graph(n), 1)
    mod = bare_modulator(())
    out = shrink_clique_path(inst, mod)
    assert out is not None and len(out.graph) < n
    g = out.graph
    assert is_proper_interval(g) and len(connected_components(g)) == 1
    assert len(clique_path(g)) < n - 1
    # a single separator vertex joined to both end edges of the removed stretch
    fresh = [v for v in g.vertices if v >= n]
    assert len(fresh) == 1
    left, right = sorted(g.neighbors(fresh[0]))[:2], sorted(g.neighbors(fresh[0]))[2:]
    assert left[1] == left[0] + 1 and right[1] == right[0] + 1
    assert shrink_clique_path(Instance(path_graph(60), 1), mod) is None


def test_shrink_clique_path_precondition():
    g = disjoint_union(claw_graph(), path_graph(5, start=4))
    with pytest.raises(ValueError):
        shrink_clique_path(Instance(g, 1), bare_modulator({0}))


def test_kernelize_examples():
    out = kernelize(Instance(path_graph(8), 0))
    assert out.status == "yes" and len(out.instance.graph) == 0
    k = 2
    claws = disjoint_union(*(claw_graph(start=4 * i) for i in range(k + 1)))
    out = kernelize(Instance(claws, k))
    assert out.status == "no" and out.instance == trivial_no_instance()
    assert out.trace.steps[-1].rule == "component-count"
    assert not feasible(Instance(claws, k))


def test_kernelize_large_random_instance():
    inst = generate_instance(200, 3, seed=7)
    out = kernelize(inst)
    after = {"yes": True, "no": False}.get(out.status)
    if after is None:
        after = feasible(out.instance)
    assert after == feasible(inst)
    assert out.trace.replay(inst) == out.instance or out.status != "reduced"


def test_trace_replay_and_progress():
    rng = random.Random(2)
    instances = [generate_instance(rng.randint(10, 50), rng.randint(1, 3), s) for s in range(20)]
    instances += [big_clique_instance(rng) for _ in range(10)] + [star_instance(rng) for _ in range(10)]
    for inst in instances:
        out = kernelize(inst)
        for step in out.trace.reductions():
            assert step.v_after < step.v_before or step.k_after < step.k_before
        if out.status == "reduced":
            assert out.trace.replay(inst) == out.instance
            again = kernelize(out.instance)
            assert len(again.trace.reductions()) == 0 and again.status == "reduced"
        for step, before, after in step_instances(inst, out.trace):
            if after is not None:
                assert feasible(before) == feasible(after), step.rule


def test_replay_rejects_wrong_instance():
    inst = big_clique_instance(random.Random(1))
    out = kernelize(inst)
    assert out.trace.reductions()
    with pytest.raises(ValueError):
        out.trace.replay(Instance(path_graph(3), inst.k))


def test_kernel_modulator_diagnostics():
    rng = random.Random(4)
    checked = 0
    for seed in range(60):
        inst = generate_instance(rng.randint(10, 60), rng.randint(1, 3), seed)
        out = kernelize(inst)
        if out.status != "reduced":
            continue
        mod = build_modulator(out.instance)
        checked += 1
        assert t_component_degree(out.instance.graph, mod.t) <= 2
        for claw in iter_claws(out.instance.graph):
            assert len(claw.vertices & mod.t) >= 2
    assert checked >= 10
