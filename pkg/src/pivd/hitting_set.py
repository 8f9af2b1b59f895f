"""Sunflowers and hitting-set family reduction.

The main entry point is :func:`reduce_preserving_minimal`, which shrinks a
family of sets of size at most ``d`` to at most ``d! (k+1)^d`` sets while
keeping exactly the same inclusion-minimal hitting sets of size at most
``k``. It works by repeatedly locating a sunflower with ``k + 2`` petals and
discarding one of its sets: any hitting set of size ``<= k`` must meet the
core of the remaining ``k + 1`` petals, and therefore also meets the
discarded one.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ParseError, ResourceLimitError


def _key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


class SetFamily:
    """Distinct non-empty sets of size at most ``d``, kept in lexicographic order."""

    __slots__ = ("sets", "d", "universe", "truncated")

    def __init__(
        self,
        sets: Iterable[Iterable[int]] = (),
        d: int | None = None,
        universe: Iterable[int] | None = None,
        truncated: bool = False,
    ):
        fs = [frozenset(s) for s in sets]
        if len(set(fs)) != len(fs):
            raise ValueError("duplicate sets in family")
        if any(not s for s in fs):
            raise ValueError("family sets must be non-empty")
        width = max((len(s) for s in fs), default=0)
        if d is None:
            d = width
        elif width > d:
            raise ValueError(f"set of size {width} exceeds bound d={d}")
        union = frozenset().union(*fs)
        universe = union if universe is None else frozenset(universe)
        if not union <= universe:
            raise ValueError("family sets must lie inside the universe")
        self.sets = tuple(sorted(fs, key=_key))
        self.d = d
        self.universe = universe
        self.truncated = truncated

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return frozenset(s) in set(self.sets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.sets == other.sets

    def __repr__(self) -> str:
        return f"SetFamily({len(self)} sets, d={self.d})"

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.sets)


@dataclass(frozen=True)
class Sunflower:
    petals: tuple[frozenset[int], ...]
    core: frozenset[int]

    def is_valid(self) -> bool:
        if len(set(self.petals)) != len(self.petals):
            return False
        if any(not (p - self.core) for p in self.petals):
            return False
        return all(a & b == self.core for a, b in combinations(self.petals, 2))


def sunflower_bound(d: int, petals: int) -> int:
    """Family size above which a sunflower with ``petals`` petals must exist."""
    return math.factorial(d) * (petals - 1) ** d


def _find_sunflower(sets: list[frozenset[int]], p: int) -> tuple[list[frozenset[int]], frozenset[int]] | None:
    if not sets:
        return None
    if p == 1:
        return [sets[0]], frozenset()
    disjoint = []
    used: set[int] = set()
    for s in sets:
        if used.isdisjoint(s):
            disjoint.append(s)
            used |= s
            if len(disjoint) == p:
                return disjoint, frozenset()
    # every set meets `used`, so some element of it is frequent
    counts = Counter(x for s in sets for x in s if x in used)
    x = min(counts, key=lambda e: (-counts[e], e))
    link = [s - {x} for s in sets if x in s and len(s) > 1]
    found = _find_sunflower(link, p)
    if found is None:
        return None
    petals, core = found
    return [q | {x} for q in petals], core | {x}


def find_sunflower(f: SetFamily | Iterable[Iterable[int]], petal_count: int) -> Sunflower | None:
    """Sunflower with exactly ``petal_count`` petals drawn from ``f``, or None.

    Follows the constructive Erdős–Rado argument, so a sunflower is always
    found once ``len(f) > d! (petal_count - 1)^d``.
    """
    if petal_count < 1:
        raise ValueError("petal_count must be at least 1")
    if not isinstance(f, SetFamily):
        f = SetFamily(f)
    found = _find_sunflower(list(f.sets), petal_count)
    if found is None:
        return None
    petals, core = found
    return Sunflower(tuple(petals), core)


class _Reducer:
    """Incremental family that drops arriving sets completing a sunflower."""

    def __init__(self, petal_count: int):
        self.p = petal_count
        self.sets: dict[frozenset[int], None] = {}
        self.index: dict[int, set[frozenset[int]]] = {}
        self.packing: list[frozenset[int]] = []
        self.packed: set[int] = set()

    def _completes_sunflower(self, s: frozenset[int]) -> bool:
        need = self.p - 1
        if len(self.packing) >= need:
            cover = frozenset().union(*self.packing[:need])
            if cover.isdisjoint(s):
                return True
        by_core: dict[frozenset[int], list[frozenset[int]]] = {}
        seen: set[frozenset[int]] = set()
        for x in sorted(s):
            for q in self.index.get(x, ()):
                if q not in seen:
                    seen.add(q)
                    core = q & s
                    if core != s and q != core:
                        by_core.setdefault(core, []).append(q)
        for core, cands in by_core.items():
            if len(cands) < need:
                continue
            used: set[int] = set()
            picked = 0
            for q in sorted(cands, key=_key):
                petal = q - core
                if used.isdisjoint(petal):
                    used |= petal
                    picked += 1
                    if picked == need:
                        return True
        return False

    def add(self, s: frozenset[int]) -> None:
        if s in self.sets or self._completes_sunflower(s):
            return
        self.sets[s] = None
        for x in s:
            self.index.setdefault(x, set()).add(s)
        if self.packed.isdisjoint(s):
            self.packing.append(s)
            self.packed |= s


def reduce_preserving_minimal(
    f: SetFamily | Iterable[Iterable[int]], k: int, d: int | None = None
) -> SetFamily:
    """Subfamily with the same minimal hitting sets of size ``<= k`` and at
    most ``d! (k+1)^d`` sets.

    ``f`` may be a lazy iterable; sets are screened as they arrive so that
    the working family stays close to its reduced size. A final pass removes
    one set from every remaining ``(k+2)``-petal sunflower until none is left.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    universe = None
    if isinstance(f, SetFamily):
        d = f.d if d is None else d
        universe = f.universe
    reducer = _Reducer(k + 2)
    width = 0
    for s in f:
        s = frozenset(s)
        if not s:
            raise ValueError("family sets must be non-empty")
        width = max(width, len(s))
        reducer.add(s)
    if d is None:
        d = width
    current = sorted(reducer.sets, key=_key)
    while True:
        found = _find_sunflower(current, k + 2)
        if found is None:
            break
        current.remove(found[0][-1])
    return SetFamily(current, d=d, universe=universe)


def is_hitting_set(f: Iterable[Iterable[int]], z: Iterable[int]) -> bool:
    z = set(z)
    return all(not z.isdisjoint(s) for s in f)


def minimal_hitting_sets(
    f: SetFamily | Iterable[Iterable[int]], k: int, max_universe: int = 20
) -> list[frozenset[int]]:
    """All inclusion-minimal hitting sets of size ``<= k`` by exhaustive search."""
    sets = list(f.sets) if isinstance(f, SetFamily) else [frozenset(s) for s in f]
    elems = sorted(frozenset().union(*sets))
    if len(elems) > max_universe:
        raise ResourceLimitError(f"universe of {len(elems)} elements exceeds limit {max_universe}")
    bit = {e: 1 << i for i, e in enumerate(elems)}
    masks = [sum(bit[e] for e in s) for s in sets]

    def hits(z: int) -> bool:
        return all(m & z for m in masks)

    out = []
    for size in range(min(k, len(elems)) + 1):
        for combo in combinations(elems, size):
            z = sum(bit[e] for e in combo)
            if hits(z) and not any(hits(z & ~bit[e]) for e in combo):
                out.append(frozenset(combo))
    out.sort(key=_key)
    return out


def parse_hypergraph(text: str) -> tuple[SetFamily, int]:
    """Read the ``d k`` header followed by one whitespace-separated set per line."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("missing 'd k' header", line=1)
    i, head = lines[0]
    try:
        d, k = (int(t) for t in head.split())
    except ValueError:
        raise ParseError("header must be two integers 'd k'", line=i) from None
    sets = []
    for i, ln in lines[1:]:
        try:
            sets.append(frozenset(int(t) for t in ln.split()))
        except ValueError:
            raise ParseError("set elements must be integers", line=i) from None
    try:
        return SetFamily(sets, d=d), k
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_hypergraph(f: SetFamily, k: int) -> str:
    rows = [f"{f.d} {k}"] + [" ".join(map(str, _key(s))) for s in f.sets]
    return "\n".join(rows) + "\n"
