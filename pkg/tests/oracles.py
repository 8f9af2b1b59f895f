"""Independent reference implementations used as test oracles.

Nothing here calls the package's recognition or obstruction code: patterns
are matched by induced-subgraph isomorphism (networkx) over vertex subsets.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from pivd.graph import Graph
from pivd.rules import Instance

# filled by the acceptance tests, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def _pattern(edges) -> nx.Graph:
    return nx.Graph(edges)


CLAW = nx.star_graph(3)
NET = _pattern([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
TENT = _pattern([(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])


def _degrees(adj: list[int], mask: int, members: list[int]) -> list[int]:
    return sorted((adj[v] & mask).bit_count() for v in members)


def induced_patterns(g: Graph, max_size: int | None = None, max_hole: int | None = None) -> set[tuple[str, frozenset[int]]]:
    """Every (kind, vertex set) inducing a claw, net, tent or hole.

    Holes are limited to ``max_hole`` vertices and subsets to ``max_size``.
    """
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [sum(1 << index[u] for u in g.neighbors(v)) for v in verts]
    n = len(verts)
    max_size = n if max_size is None else min(n, max_size)
    max_hole = max_size if max_hole is None else max_hole
    h = to_nx(g)
    found = set()
    for size in range(4, max_size + 1):
        for combo in combinations(range(n), size):
            mask = sum(1 << i for i in combo)
            deg = _degrees(adj, mask, list(combo))
            members = frozenset(verts[i] for i in combo)
            if size == 4 and deg == [1, 1, 1, 3]:
                found.add(("claw", members))
            if size <= max_hole and deg == [2] * size and nx.is_connected(h.subgraph(members)):
                found.add(("hole", members))
            if size == 6 and deg == [1, 1, 1, 3, 3, 3] and nx.is_isomorphic(h.subgraph(members), NET):
                found.add(("net", members))
            if size == 6 and deg == [2, 2, 2, 4, 4, 4] and nx.is_isomorphic(h.subgraph(members), TENT):
                found.add(("tent", members))
    return found


def has_pattern(g: Graph) -> bool:
    """Brute-force check for any claw, net, tent or hole at all."""
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [sum(1 << index[u] for u in g.neighbors(v)) for v in verts]
    h = None
    n = len(verts)
    for size in range(4, n + 1):
        for combo in combinations(range(n), size):
            mask = sum(1 << i for i in combo)
            deg = _degrees(adj, mask, list(combo))
            if size == 4 and deg == [1, 1, 1, 3]:
                return True
            if deg == [2] * size:
                h = h or to_nx(g)
                if nx.is_connected(h.subgraph(verts[i] for i in combo)):
                    return True
            if size == 6 and deg in ([1, 1, 1, 3, 3, 3], [2, 2, 2, 4, 4, 4]):
                h = h or to_nx(g)
                sub = h.subgraph(verts[i] for i in combo)
                if nx.is_isomorphic(sub, NET) or nx.is_isomorphic(sub, TENT):
                    return True
    return False


def brute_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    return {frozenset(c) for c in nx.find_cliques(to_nx(g))} if len(g) else set()


def brute_max_clique_size(g: Graph) -> int:
    verts = sorted(g.vertices)
    for size in range(len(verts), 0, -1):
        for combo in combinations(verts, size):
            if g.is_clique(combo):
                return size
    return 0


def brute_hitting_sets(sets: list[frozenset[int]], k: int) -> list[frozenset[int]]:
    """Minimal hitting sets of size <= k, from the definition."""
    universe = sorted(frozenset().union(*sets)) if sets else []
    hitting = [
        frozenset(z)
        for size in range(min(k, len(universe)) + 1)
        for z in combinations(universe, size)
        if all(s & frozenset(z) for s in sets)
    ]
    hs = set(hitting)
    return sorted((z for z in hitting if not any(z - {x} in hs for x in z)), key=lambda z: tuple(sorted(z)))


def random_family(rng: random.Random, universe: int, d: int, count: int) -> list[frozenset[int]]:
    out: set[frozenset[int]] = set()
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        out.add(frozenset(rng.sample(range(universe), rng.randint(1, min(d, universe)))))
    return sorted(out, key=lambda s: tuple(sorted(s)))


def unit_interval_edges(n: int, rng: random.Random, span: float):
    xs = [rng.uniform(0, span) for _ in range(n)]
    return [(i, j) for i, j in combinations(range(n), 2) if abs(xs[i] - xs[j]) < 1]


def perturbed_unit_interval(n: int, rng: random.Random) -> Graph:
    """Unit interval graph with a few edges flipped; close to the class boundary."""
    edges = set(unit_interval_edges(n, rng, max(1.0, n / rng.uniform(1.5, 4))))
    for _ in range(rng.randint(0, 2)):
        if n >= 2:
            e = tuple(sorted(rng.sample(range(n), 2)))
            edges ^= {e}
    return Graph.from_edges(edges, vertices=range(n))


def step_instances(inst: Instance, trace):
    """Walk a kernelization trace, yielding (step, before, after) per step.

    ``after`` is None for verdict steps.
    """
    from pivd.graph import delete_vertices, splice_component

    g, k = inst.graph, inst.k
    for s in trace.steps:
        before = Instance(g, k)
        if s.verdict is not None:
            yield s, before, None
            continue
        if s.rule == "lemma5":
            comp = frozenset(s.witness) | frozenset(s.left) | frozenset(s.right)
            g = splice_component(g, comp, s.witness, len(s.added), s.left, s.right)
        else:
            g = delete_vertices(g, s.witness)
        k = s.k_after
        yield s, before, Instance(g, k)
