"""Random and structured instance generators.

``generate_instance`` is the main test distribution: a random unit interval
graph plus a few noise vertices, so that deleting the noise always works.
The remaining builders produce instances on which a particular reduction
rule fires.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, complete_graph, cycle_graph, disjoint_union
from .rules import Instance, zeta


def unit_interval_graph(n: int, rng: random.Random, density: float = 4.0) -> Graph:
    """Intersection graph of ``n`` random unit intervals with shuffled ids.

    ``density`` is the expected number of left endpoints per unit length.
    """
    span = max(1.0, n / density)
    starts = [rng.uniform(0.0, span) for _ in range(n)]
    ids = list(range(n))
    rng.shuffle(ids)
    edges = [(ids[i], ids[j]) for i, j in combinations(range(n), 2) if abs(starts[i] - starts[j]) < 1.0]
    return Graph.from_edges(edges, vertices=range(n))


def generate_instance(
    n: int, k_noise: int, seed: int, density: float = 4.0, noise_degree: int = 6
) -> Instance:
    """Proper interval graph on ``0..n-1`` plus ``k_noise`` noise vertices.

    Noise vertex ``n + i`` is joined to between 1 and ``noise_degree``
    random base vertices and to each other noise vertex with probability
    1/2. The budget is ``k_noise``, so the instance is always feasible.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    base = unit_interval_graph(n, rng, density)
    edges = list(base.edges())
    noise = list(range(n, n + k_noise))
    for v in noise:
        for u in rng.sample(range(n), rng.randint(1, min(n, noise_degree))):
            edges.append((u, v))
    for u, v in combinations(noise, 2):
        if rng.random() < 0.5:
            edges.append((u, v))
    return Instance(Graph.from_edges(edges, vertices=range(n + k_noise)), k_noise)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p], vertices=range(n)
    )


def big_clique_instance(rng: random.Random) -> Instance:
    """A large clique with a few random outsiders; aims at the irrelevant-vertex rule.

    With budget 1 or 2, most instances also give up to k+1 clique vertices
    two private pendant leaves each. Every such vertex centres its own
    claws, so the minimum deletion count can exceed the budget.
    """
    k = rng.randint(1, 3)
    pendants = rng.randint(1, k + 1) if k <= 2 and rng.random() < 0.6 else 0
    # each pendant centre adds about three vertices to the modulator, which
    # raises the clique threshold by about 3(k+1)
    size = rng.randint(12, 30) + (k + 1) * (3 * pendants + 2) + 4 * pendants
    extra = rng.randint(1, 3)
    edges = list(complete_graph(size).edges())
    for v in range(size, size + extra):
        for u in rng.sample(range(size + extra), rng.randint(1, 4)):
            if u != v:
                edges.append((u, v))
    nxt = size + extra
    for c in rng.sample(range(size), pendants):
        edges += [(c, nxt), (c, nxt + 1)]
        nxt += 2
    return Instance(Graph.from_edges(edges, vertices=range(nxt)), k)


def long_cycle_instance(rng: random.Random, min_cliques: int | None = None) -> Instance:
    """A long hole, optionally with triangles glued onto distinct cycle edges.

    The hole needs one deletion, so its modulator is a single vertex and
    the path left behind has at least ``min_cliques`` maximal cliques. By
    default that is just above the clique-path threshold for a one-vertex
    modulator and the clique number the glued triangles produce. Some
    instances also get a disjoint pair of linked claws, which needs two
    more deletions and makes small budgets infeasible.
    """
    glue = rng.randint(1, 4) if rng.random() < 0.5 else 0
    if min_cliques is None:
        min_cliques = zeta(1, 3 if glue else 2) + 1
    n = min_cliques + rng.randint(3, 40)
    edges = list(cycle_graph(n).edges())
    for t, i in enumerate(sorted(rng.sample(range(n), glue))):
        v = n + t
        edges += [(i, v), ((i + 1) % n, v)]
    if rng.random() < 0.4:
        c = n + glue
        # claws c..c+3 and c+4..c+7 joined leaf to leaf
        edges += [(c, c + 1), (c, c + 2), (c, c + 3), (c + 4, c + 5), (c + 4, c + 6), (c + 4, c + 7), (c + 3, c + 7)]
    return Instance(Graph.from_edges(edges), rng.randint(1, 3))


def star_instance(rng: random.Random) -> Instance:
    """Hubs joined to many independent leaves, some extended to short paths.

    Many claws share each hub, so the sunflower reduction discards most of
    them and the hub ends up alone in claws leaving the modulator. With two
    or three hubs (chained hub to hub) small budgets become infeasible.
    """
    k = rng.randint(1, 3)
    hubs = rng.choice((1, 1, 2, 3))
    edges = []
    nxt = hubs
    for h in range(hubs):
        if h:
            edges.append((h - 1, h))
        for _ in range(rng.randint(3 * (k + 2), 3 * (k + 2) + 8)):
            edges.append((h, nxt))
            if rng.random() < 0.3:
                edges.append((nxt, nxt + 1))
                nxt += 1
            nxt += 1
    g = Graph.from_edges(edges)
    extra = []
    if rng.random() < 0.5:
        extra.append(cycle_graph(rng.randint(4, 12), start=nxt))
    return Instance(disjoint_union(g, *extra), k)
