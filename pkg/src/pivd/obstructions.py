"""Forbidden induced subgraphs of proper interval graphs.

A graph is a proper interval graph exactly when it has no induced claw,
net, tent or hole (chordless cycle of length at least four). The "small"
obstructions are claws, nets, tents and holes of length 4 to 8; every small
obstruction has at most eight vertices.

Net: triangle ``a, b, c`` plus one pendant on each triangle vertex.
Tent: triangle ``a, b, c`` plus ``x ~ {a, b}``, ``y ~ {b, c}``, ``z ~ {a, c}``.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, connected_components, induced_subgraph
from .hitting_set import SetFamily
from .recognition import is_proper_interval

KINDS = ("claw", "hole", "net", "tent")
_RANK = {kind: i for i, kind in enumerate(KINDS)}
SMALL_HOLE_MAX = 8
SMALL_SIZE_BOUND = 8


@dataclass(frozen=True)
class Obstruction:
    kind: str
    vertices: frozenset[int]

    def __post_init__(self) -> None:
        if self.kind not in _RANK:
            raise ValueError(f"unknown obstruction kind {self.kind!r}")

    @property
    def hole_length(self) -> int | None:
        return len(self.vertices) if self.kind == "hole" else None

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return _RANK[self.kind], tuple(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)


# -- pattern generators ---------------------------------------------------


def iter_claws(g: Graph) -> Iterator[Obstruction]:
    for c in g.vertices:
        nb = sorted(g.neighbors(c))
        for i, a in enumerate(nb):
            na = g.neighbors(a)
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if b in na:
                    continue
                nbb = g.neighbors(b)
                for d in nb[j + 1 :]:
                    if d not in na and d not in nbb:
                        yield Obstruction("claw", frozenset((c, a, b, d)))


def _holes_anchored(g: Graph, a: int, min_len: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Holes whose smallest vertex is ``a``, as vertex sequences."""
    na = g.neighbors(a)
    path = [a]
    on_path = {a}

    def extend() -> Iterator[tuple[int, ...]]:
        last = path[-1]
        interior = path[1:-1]
        for w in sorted(g.neighbors(last)):
            if w <= a or w in on_path:
                continue
            nw = g.neighbors(w)
            if any(p in nw for p in interior):
                continue
            if w in na:
                length = len(path) + 1
                if length >= 4 and length >= min_len and path[1] < w:
                    yield tuple(path) + (w,)
                continue
            if len(path) + 1 < max_len:
                path.append(w)
                on_path.add(w)
                yield from extend()
                path.pop()
                on_path.discard(w)

    for p1 in sorted(na):
        if p1 <= a:
            continue
        path.append(p1)
        on_path.add(p1)
        yield from extend()
        path.pop()
        on_path.discard(p1)


def hole_core(g: Graph) -> Graph:
    """``g`` minus repeatedly removed simplicial vertices.

    A hole vertex has two non-adjacent hole neighbours, so it is never
    simplicial in any induced subgraph containing the hole; every hole of
    ``g`` therefore survives in the core.
    """
    alive = set(g.vertices)
    nbrs = {v: set(g.neighbors(v)) for v in alive}

    def simplicial(v: int) -> bool:
        nv = nbrs[v]
        return all(nv <= nbrs[u] | {u} for u in nv)

    queue = deque(sorted(alive))
    queued = set(alive)
    while queue:
        v = queue.popleft()
        queued.discard(v)
        if v not in alive or not simplicial(v):
            continue
        alive.discard(v)
        for u in nbrs.pop(v):
            nbrs[u].discard(v)
            if u not in queued:
                queue.append(u)
                queued.add(u)
    return g if len(alive) == len(g) else induced_subgraph(g, alive)


def iter_holes(g: Graph, min_length: int = 4, max_length: int = SMALL_HOLE_MAX) -> Iterator[Obstruction]:
    """Holes with ``min_length <= length <= max_length``, grouped by smallest vertex."""
    core = hole_core(g)
    for a in core.vertices:
        for cyc in _holes_anchored(core, a, min_length, max_length):
            yield Obstruction("hole", frozenset(cyc))


def _split_triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    """Triangles ``a < b < c`` in which no two closed neighbourhoods are nested.

    Nets and tents only live on such triangles: each triangle vertex has a
    neighbour missed by each of the other two. Skipping the rest keeps large
    cliques of near-twins cheap.
    """
    closed = {v: g.closed_neighbors(v) for v in g.vertices}
    split = {
        v: frozenset(u for u in g.neighbors(v) if not (closed[u] <= closed[v] or closed[v] <= closed[u]))
        for v in g.vertices
    }
    for a in g.vertices:
        sa = split[a]
        for b in sorted(u for u in sa if u > a):
            for c in sorted(u for u in sa & split[b] if u > b):
                yield a, b, c


def _independent_triples(xs, ys, zs, g: Graph) -> Iterator[tuple[int, int, int]]:
    for x in sorted(xs):
        nx_ = g.neighbors(x)
        for y in sorted(ys):
            if y in nx_:
                continue
            ny = g.neighbors(y)
            for z in sorted(zs):
                if z not in nx_ and z not in ny:
                    yield x, y, z


def iter_nets(g: Graph) -> Iterator[Obstruction]:
    for a, b, c in _split_triangles(g):
        na, nb, nc = g.closed_neighbors(a), g.closed_neighbors(b), g.closed_neighbors(c)
        xs, ys, zs = na - nb - nc, nb - na - nc, nc - na - nb
        if not (xs and ys and zs):
            continue
        for x, y, z in _independent_triples(xs, ys, zs, g):
            yield Obstruction("net", frozenset((a, b, c, x, y, z)))


def iter_tents(g: Graph) -> Iterator[Obstruction]:
    for a, b, c in _split_triangles(g):
        na, nb, nc = g.closed_neighbors(a), g.closed_neighbors(b), g.closed_neighbors(c)
        xs, ys, zs = (na & nb) - nc, (nb & nc) - na, (na & nc) - nb
        if not (xs and ys and zs):
            continue
        for x, y, z in _independent_triples(xs, ys, zs, g):
            yield Obstruction("tent", frozenset((a, b, c, x, y, z)))


_GENERATORS = {
    "claw": iter_claws,
    "hole": iter_holes,
    "net": iter_nets,
    "tent": iter_tents,
}


def iter_small_obstructions(g: Graph) -> Iterator[Obstruction]:
    """Every small obstruction of ``g`` exactly once (claws, holes, nets, tents)."""
    if is_proper_interval(g):
        return
    for kind in KINDS:
        yield from _GENERATORS[kind](g)


def find_small_obstruction(g: Graph) -> Obstruction | None:
    """Least small obstruction, ordered by kind (claw < hole < net < tent)
    and then by the sorted vertex tuple."""
    if is_proper_interval(g):
        return None
    for kind in KINDS:
        if kind == "hole":
            # all holes through the smallest anchor beat every later anchor
            core = hole_core(g)
            for a in core.vertices:
                best = min(
                    (tuple(sorted(c)) for c in _holes_anchored(core, a, 4, SMALL_HOLE_MAX)),
                    default=None,
                )
                if best is not None:
                    return Obstruction("hole", frozenset(best))
            continue
        best = min(_GENERATORS[kind](g), key=Obstruction.sort_key, default=None)
        if best is not None:
            return best
    return None


def first_small_obstruction(g: Graph) -> Obstruction | None:
    """Some small obstruction, cheapest to find first; deterministic but not
    lexicographically least. Used by the branching solver."""
    if is_proper_interval(g):
        return None
    for kind in KINDS:
        for obs in _GENERATORS[kind](g):
            return obs
    return None


def enumerate_small_obstructions(g: Graph, limit: int | None = None) -> SetFamily:
    """Family of vertex sets of all small obstructions, lexicographically sorted.

    With ``limit`` the enumeration stops after that many sets and the result
    has ``truncated=True``.
    """
    sets = []
    truncated = False
    for obs in iter_small_obstructions(g):
        if limit is not None and len(sets) >= limit:
            truncated = True
            break
        sets.append(obs.vertices)
    return SetFamily(sets, d=SMALL_SIZE_BOUND, universe=g.vertices, truncated=truncated)


# -- holes of any length --------------------------------------------------


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties to the smallest id."""
    weight = {v: 0 for v in g.vertices}
    heap = [(0, v) for v in g.vertices]
    heapq.heapify(heap)
    order = []
    done = set()
    while heap:
        w, v = heapq.heappop(heap)
        if v in done or -w != weight[v]:
            continue
        done.add(v)
        order.append(v)
        for u in g.neighbors(v):
            if u not in done:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    return order


def _peo_violations(g: Graph, order: list[int]) -> Iterator[tuple[int, int, int]]:
    """Triples ``(v, u, p)``: u, p non-adjacent neighbours of v visited before it."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if pos[u] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        np_ = g.neighbors(parent)
        for u in sorted(earlier):
            if u != parent and u not in np_:
                yield v, u, parent


def is_chordal(g: Graph) -> bool:
    return next(_peo_violations(g, maximum_cardinality_search(g)), None) is None


def _shortest_path(g: Graph, src: int, dst: int, allowed) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in g.neighbors(x):
            if y not in prev and y in allowed:
                prev[y] = x
                queue.append(y)
    return None


def _hole_through(g: Graph, v: int, u: int, w: int, pool: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """Hole formed by v and a shortest u-w path avoiding N[v] - {u, w}."""
    nv = g.closed_neighbors(v)
    if pool is None:
        allowed = _Complement(nv - {u, w})
    else:
        allowed = set(pool) - nv | {u, w}
    path = _shortest_path(g, u, w, allowed)
    if path is None:
        return None
    return (v, *path)


class _Complement:
    __slots__ = ("excluded",)

    def __init__(self, excluded):
        self.excluded = excluded

    def __contains__(self, x) -> bool:
        return x not in self.excluded


def is_induced_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        return False
    vs = set(cycle)
    for i, x in enumerate(cycle):
        if not g.has_edge(x, cycle[(i + 1) % n]):
            return False
        if len(g.neighbors(x) & vs) != 2:
            return False
    return True


def _some_hole(g: Graph) -> tuple[int, ...] | None:
    order = maximum_cardinality_search(g)
    pos = {x: i for i, x in enumerate(order)}
    violated = False
    for v, u, p in _peo_violations(g, order):
        violated = True
        for pool in (order[: pos[v]], None):
            cyc = _hole_through(g, v, u, p, pool)
            if cyc is not None and is_induced_cycle(g, cyc):
                return cyc
    if not violated:
        return None
    # exhaustive fallback: any hole has a vertex whose two hole-neighbours
    # are joined by an induced path avoiding the rest of its neighbourhood
    for v in g.vertices:
        nb = sorted(g.neighbors(v))
        for i, u in enumerate(nb):
            for w in nb[i + 1 :]:
                if g.has_edge(u, w):
                    continue
                cyc = _hole_through(g, v, u, w)
                if cyc is not None and is_induced_cycle(g, cyc):
                    return cyc
    return None  # pragma: no cover - a non-chordal graph always has a hole


def find_any_hole(g: Graph, min_length: int = 4) -> Obstruction | None:
    """An induced cycle of length at least ``min_length``, or None."""
    if min_length < 4:
        raise ValueError("min_length must be at least 4")
    cyc = _some_hole(g)
    if cyc is None:
        return None
    if len(cyc) >= min_length:
        return Obstruction("hole", frozenset(cyc))
    for obs in iter_holes(g, min_length, max(len(g), min_length)):
        return obs
    return None


# -- verification ---------------------------------------------------------


def classify(g: Graph, vertices: Iterable[int]) -> str | None:
    """Kind of obstruction induced by ``vertices`` in ``g``, if any."""
    vs = frozenset(vertices)
    h = induced_subgraph(g, vs)
    n, m = len(h), h.number_of_edges()
    deg = sorted(h.degree(v) for v in h.vertices)
    if n >= 4 and deg == [2] * n and len(connected_components(h)) == 1:
        return "hole"
    if n == 4 and deg == [1, 1, 1, 3]:
        return "claw"
    if n != 6:
        return None
    inner = [v for v in h.vertices if h.degree(v) >= 3]
    outer = [v for v in h.vertices if h.degree(v) <= 2]
    if len(inner) != 3 or not h.is_clique(inner):
        return None
    if any(h.has_edge(x, y) for i, x in enumerate(outer) for y in outer[i + 1 :]):
        return None
    attach = sorted(tuple(sorted(h.neighbors(x))) for x in outer)
    if m == 6 and deg == [1, 1, 1, 3, 3, 3] and len(set(attach)) == 3:
        return "net"
    if m == 9 and deg == [2, 2, 2, 4, 4, 4] and len(set(attach)) == 3:
        return "tent"
    return None


def is_valid_obstruction(g: Graph, obs: Obstruction) -> bool:
    return classify(g, obs.vertices) == obs.kind
