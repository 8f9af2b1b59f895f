"""Exact proper interval vertex deletion.

``solve`` branches on the vertices of an obstruction (a small one when
available, otherwise any hole), works component by component, and prunes
with a greedy packing of vertex-disjoint obstructions. Long holes make the
branching factor unbounded, so this is exact but not FPT; it is meant for
instances of a few hundred vertices at most.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceLimitError
from .graph import Graph, connected_components, delete_vertices, induced_subgraph
from .obstructions import Obstruction, find_any_hole, first_small_obstruction
from .recognition import is_proper_interval


@dataclass(frozen=True)
class Solution:
    """``deletion_set`` is None when no deletion set within budget exists."""

    deletion_set: frozenset[int] | None
    nodes_explored: int = 0

    @property
    def feasible(self) -> bool:
        return self.deletion_set is not None

    def __bool__(self) -> bool:
        return self.feasible


def branching_obstruction(g: Graph) -> Obstruction | None:
    obs = first_small_obstruction(g)
    if obs is None and not is_proper_interval(g):
        obs = find_any_hole(g)
    return obs


def packing_lower_bound(g: Graph, cap: int) -> int:
    """Size of a greedy vertex-disjoint obstruction packing, counted up to ``cap + 1``."""
    count = 0
    while count <= cap:
        obs = branching_obstruction(g)
        if obs is None:
            break
        count += 1
        g = delete_vertices(g, obs.vertices)
    return count


class _Search:
    def __init__(self) -> None:
        self.nodes = 0

    def minimum(self, g: Graph, cap: int) -> frozenset[int] | None:
        """A minimum deletion set of ``g`` if its size is at most ``cap``."""
        self.nodes += 1
        chosen: set[int] = set()
        remaining = cap
        for comp in connected_components(g):
            sub = induced_subgraph(g, comp)
            if is_proper_interval(sub):
                continue
            lower = packing_lower_bound(sub, remaining)
            if lower > remaining:
                return None
            for b in range(max(lower, 1), remaining + 1):
                sol = self.branch(sub, b)
                if sol is not None:
                    break
            else:
                return None
            chosen |= sol
            remaining -= len(sol)
        return frozenset(chosen)

    def branch(self, g: Graph, budget: int) -> frozenset[int] | None:
        self.nodes += 1
        obs = branching_obstruction(g)
        if obs is None:
            return frozenset()
        if budget == 0:
            return None
        for v in sorted(obs.vertices):
            rest = self.minimum(delete_vertices(g, [v]), budget - 1)
            if rest is not None:
                return rest | {v}
        return None


def solve(g: Graph, budget: int) -> Solution:
    """Minimum-size deletion set of ``g`` if one of size ``<= budget`` exists."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    search = _Search()
    found = search.minimum(g, budget)
    return Solution(found, search.nodes)


def minimum_deletion(g: Graph, cap: int) -> int | None:
    """Size of a minimum deletion set, or None when it exceeds ``cap``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    sol = solve(g, cap)
    return None if sol.deletion_set is None else len(sol.deletion_set)


def brute_force_solve(g: Graph, budget: int, max_vertices: int = 18) -> Solution:
    """Try every vertex subset of size ``<= budget`` in lexicographic order."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if len(g) > max_vertices:
        raise ResourceLimitError(f"{len(g)} vertices exceeds brute-force limit {max_vertices}")
    tried = 0
    for size in range(min(budget, len(g)) + 1):
        for combo in combinations(g.vertices, size):
            tried += 1
            if is_proper_interval(delete_vertices(g, combo)):
                return Solution(frozenset(combo), tried)
    return Solution(None, tried)
