"""Immutable simple undirected graphs with stable integer vertex ids.

Every operation returns a new :class:`Graph`; nothing is modified in place.
Vertices are non-negative integers and iteration is always in ascending id
order, which is the tie-breaking rule used throughout the package.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Mapping


class Graph:
    """A simple undirected graph.

    Parameters
    ----------
    adjacency : mapping from vertex id to an iterable of neighbour ids.
        Must be symmetric and loop-free.
    next_id : smallest id that may be handed out to a fresh vertex. Defaults
        to ``max(vertices) + 1``; carried through derived graphs so that ids
        of deleted vertices are never reused.
    """

    __slots__ = ("_adj", "_vertices", "_next_id", "_hash")

    def __init__(self, adjacency: Mapping[int, Iterable[int]] = (), next_id: int | None = None):
        adj = {int(v): frozenset(int(u) for u in nbrs) for v, nbrs in dict(adjacency).items()}
        for v, nbrs in adj.items():
            if v < 0:
                raise ValueError(f"vertex ids must be non-negative, got {v}")
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if u not in adj or v not in adj[u]:
                    raise ValueError(f"adjacency is not symmetric for edge {v}-{u}")
        self._init(adj, next_id)

    def _init(self, adj: dict[int, frozenset[int]], next_id: int | None) -> None:
        self._adj = adj
        self._vertices = tuple(sorted(adj))
        floor = self._vertices[-1] + 1 if self._vertices else 0
        self._next_id = floor if next_id is None else max(next_id, floor)
        self._hash = None

    @classmethod
    def _trusted(cls, adj: dict[int, frozenset[int]], next_id: int | None) -> "Graph":
        g = cls.__new__(cls)
        g._init(adj, next_id)
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj)

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def next_id(self) -> int:
        return self._next_id

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in self._vertices:
            for u in sorted(self._adj[v]):
                if v < u:
                    yield v, u

    def number_of_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((v, n) for v, n in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.number_of_edges()})"


def _check_subset(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    unknown = [v for v in s if v not in g]
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    return s


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph of ``g`` induced by ``s``; vertex ids are preserved."""
    keep = _check_subset(g, s)
    adj = {v: g.neighbors(v) & keep for v in keep}
    return Graph._trusted(adj, g.next_id)


def delete_vertices(g: Graph, x: Iterable[int]) -> Graph:
    x = _check_subset(g, x)
    if not x:
        return g
    return induced_subgraph(g, set(g.vertices) - x)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen: set[int] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def splice_component(
    g: Graph,
    component: Iterable[int],
    removed: Iterable[int],
    new_clique_size: int,
    left_attach: Iterable[int],
    right_attach: Iterable[int],
) -> Graph:
    """Replace ``removed`` by a fresh clique joined to both attachment sets.

    The fresh vertices get ids starting at ``g.next_id``.
    """
    component = _check_subset(g, component)
    removed = frozenset(removed)
    left, right = frozenset(left_attach), frozenset(right_attach)
    if not removed <= component:
        raise ValueError("removed vertices must lie inside the component")
    rest = component - removed
    if not (left <= rest and right <= rest):
        raise ValueError("attachment sets must lie in component minus removed")
    if left & right:
        raise ValueError("attachment sets must be disjoint")
    if new_clique_size < 0:
        raise ValueError("new_clique_size must be non-negative")

    base = delete_vertices(g, removed)
    adj = {v: set(n) for v, n in base._adj.items()}
    fresh = list(range(g.next_id, g.next_id + new_clique_size))
    attach = left | right
    for c in fresh:
        adj[c] = (set(fresh) - {c}) | attach
    for a in attach:
        adj[a].update(fresh)
    return Graph._trusted({v: frozenset(n) for v, n in adj.items()}, g.next_id + new_clique_size)


# -- small named graphs ---------------------------------------------------


def path_graph(n: int, start: int = 0) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(zip(vs, vs[1:]), vertices=vs)


def cycle_graph(n: int, start: int = 0) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    return Graph.from_edges(zip(vs, vs[1:] + vs[:1]))


def complete_graph(n: int, start: int = 0) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(combinations(vs, 2), vertices=vs)


def star_graph(leaves: int, start: int = 0) -> Graph:
    """Centre ``start`` joined to ``leaves`` pendant vertices."""
    return Graph.from_edges(((start, start + i) for i in range(1, leaves + 1)), vertices=[start])


def claw_graph(start: int = 0) -> Graph:
    return star_graph(3, start)


def net_graph(start: int = 0) -> Graph:
    """Triangle 0,1,2 with pendants 3-0, 4-1, 5-2 (offset by ``start``)."""
    e = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges((a + start, b + start) for a, b in e)


def tent_graph(start: int = 0) -> Graph:
    """Triangle 0,1,2 with 3~{0,1}, 4~{1,2}, 5~{0,2} (offset by ``start``)."""
    e = [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)]
    return Graph.from_edges((a + start, b + start) for a, b in e)


def disjoint_union(*graphs: Graph) -> Graph:
    """Union of graphs on pairwise disjoint vertex sets (ids kept)."""
    adj: dict[int, frozenset[int]] = {}
    for h in graphs:
        for v in h.vertices:
            if v in adj:
                raise ValueError(f"vertex {v} occurs in more than one graph")
            adj[v] = h.neighbors(v)
    return Graph._trusted(adj, max((h.next_id for h in graphs), default=0))


def relabel_dense(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Renumber vertices to ``0..n-1`` in ascending id order."""
    mapping = {v: i for i, v in enumerate(g.vertices)}
    adj = {mapping[v]: frozenset(mapping[u] for u in g.neighbors(v)) for v in g.vertices}
    return Graph._trusted(adj, None), mapping
