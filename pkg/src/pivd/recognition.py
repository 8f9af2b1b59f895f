"""Proper interval graph recognition, clique paths and maximum cliques.

Recognition runs three lexicographic breadth-first sweeps per connected
component (the last two breaking ties towards the end of the previous sweep)
and then checks the umbrella property of the final sweep directly, so a
returned ordering is always a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Graph, connected_components


@dataclass(frozen=True)
class ProperOrdering:
    """A vertex ordering with the umbrella property.

    ``reach[i]`` is the position of the right-most neighbour of ``order[i]``
    (or ``i`` itself), so ``order[i..reach[i]]`` is a clique.
    """

    order: tuple[int, ...]
    position: dict[int, int] = field(repr=False)
    reach: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class CliquePath:
    cliques: tuple[frozenset[int], ...]
    span: dict[int, tuple[int, int]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cliques)


class _Block:
    __slots__ = ("items", "prev", "next", "split")

    def __init__(self) -> None:
        self.items: dict[int, None] = {}
        self.prev: _Block | None = None
        self.next: _Block | None = None
        self.split: _Block | None = None


def lexbfs(g: Graph, vertices: Iterable[int], key: Callable[[int], object]) -> list[int]:
    """Lexicographic BFS over ``vertices`` by partition refinement.

    Among tied vertices the one with the smallest ``key`` is visited first.
    """
    head = _Block()
    head.items = dict.fromkeys(sorted(vertices, key=key))
    block_of = {v: head for v in head.items}
    visited: list[int] = []
    done: set[int] = set()

    while head is not None:
        if not head.items:
            head = head.next
            if head is not None:
                head.prev = None
            continue
        v = next(iter(head.items))
        del head.items[v]
        del block_of[v]
        visited.append(v)
        done.add(v)

        touched = []
        for w in sorted((u for u in g.neighbors(v) if u in block_of), key=key):
            b = block_of[w]
            nb = b.split
            if nb is None:
                nb = _Block()
                nb.prev, nb.next = b.prev, b
                if b.prev is not None:
                    b.prev.next = nb
                else:
                    head = nb
                b.prev = nb
                b.split = nb
                touched.append(b)
            del b.items[w]
            nb.items[w] = None
            block_of[w] = nb
        for b in touched:
            b.split = None
            if not b.items:
                if b.prev is not None:
                    b.prev.next = b.next
                if b.next is not None:
                    b.next.prev = b.prev
    return visited


def _reach(g: Graph, order: list[int] | tuple[int, ...]) -> list[int] | None:
    """Right reach per position, or None if the umbrella property fails."""
    pos = {v: i for i, v in enumerate(order)}
    reach = []
    last = -1
    for i, v in enumerate(order):
        right = [pos[u] for u in g.neighbors(v) if pos[u] > i]
        r = max(right, default=i)
        # right neighbours must be exactly positions i+1..r, and r monotone
        if len(right) != r - i or r < last:
            return None
        reach.append(r)
        last = r
    return reach


def has_umbrella_property(g: Graph, order: Iterable[int]) -> bool:
    order = list(order)
    if sorted(order) != list(g.vertices):
        return False
    return _reach(g, order) is not None


def _component_ordering(g: Graph, comp: Iterable[int]) -> list[int] | None:
    comp = list(comp)
    sweep = lexbfs(g, comp, key=lambda v: v)
    for _ in range(2):
        pos = {v: i for i, v in enumerate(sweep)}
        sweep = lexbfs(g, comp, key=lambda v, pos=pos: -pos[v])
    if _reach(g, sweep) is None:
        return None
    if sweep[0] > sweep[-1]:
        sweep.reverse()
    return sweep


def proper_interval_ordering(g: Graph) -> ProperOrdering | None:
    """Return a proper interval ordering of ``g`` or ``None``.

    Components are laid out one after another, ordered by smallest vertex.
    """
    order: list[int] = []
    for comp in connected_components(g):
        part = _component_ordering(g, comp)
        if part is None:
            return None
        order.extend(part)
    reach = _reach(g, order)
    if reach is None:  # pragma: no cover - components are verified above
        return None
    return ProperOrdering(tuple(order), {v: i for i, v in enumerate(order)}, tuple(reach))


def is_proper_interval(g: Graph) -> bool:
    return proper_interval_ordering(g) is not None


def _require_ordering(g: Graph) -> ProperOrdering:
    sigma = proper_interval_ordering(g)
    if sigma is None:
        raise ValueError("graph is not a proper interval graph")
    return sigma


def maximal_clique_intervals(sigma: ProperOrdering) -> list[tuple[int, int]]:
    """Maximal cliques as inclusive position intervals ``(i, reach[i])``."""
    out = []
    prev = -1
    for i, r in enumerate(sigma.reach):
        if r > prev:
            out.append((i, r))
        prev = r
    return out


def clique_path(g: Graph) -> CliquePath:
    """Clique path of a connected proper interval graph."""
    if len(g) == 0 or len(connected_components(g)) != 1:
        raise ValueError("clique_path needs a non-empty connected graph")
    sigma = _require_ordering(g)
    intervals = maximal_clique_intervals(sigma)
    cliques = tuple(frozenset(sigma.order[i : r + 1]) for i, r in intervals)
    span: dict[int, tuple[int, int]] = {}
    for j, c in enumerate(cliques):
        for v in c:
            first, _ = span.get(v, (j, j))
            span[v] = (first, j)
    return CliquePath(cliques, span)


def maximum_clique(g: Graph) -> frozenset[int]:
    """Largest clique of a proper interval graph (left-most in the ordering)."""
    sigma = _require_ordering(g)
    if not sigma.order:
        return frozenset()
    best = max(range(len(sigma.order)), key=lambda i: (sigma.reach[i] - i, -i))
    return frozenset(sigma.order[best : sigma.reach[best] + 1])


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))
