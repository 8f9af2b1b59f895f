"""Reduction rules and the kernelization driver for PIVD.

PIVD asks whether at most ``k`` vertex deletions turn a graph into a proper
interval graph. The driver repeatedly

1. drops components that are already proper interval and answers NO when
   more than ``k`` components remain;
2. builds a modulator ``T`` whose removal leaves a proper interval graph
   while every small minimal hitting set of size ``<= k`` lives inside ``T``;
3. deletes an irrelevant vertex of an oversized clique outside ``T``;
4. deletes vertices of ``T`` that every solution must contain;
5. shrinks a long clique path outside ``T``, replacing its middle by a
   clique of separator size;

restarting after every change. Thresholds use the measured ``|T|`` and the
measured clique number outside ``T``; the worst-case polynomials in ``k``
are kept as assertions.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field

from .graph import (
    Graph,
    claw_graph,
    connected_components,
    delete_vertices,
    induced_subgraph,
    splice_component,
)
from .hitting_set import SetFamily, reduce_preserving_minimal
from .obstructions import SMALL_SIZE_BOUND, find_small_obstruction, iter_claws, iter_small_obstructions
from .recognition import clique_path, is_proper_interval, maximal_clique_intervals, proper_interval_ordering
from .solver import solve

log = logging.getLogger(__name__)


class Verdict(enum.Enum):
    NO = "no"
    YES = "yes"


NO = Verdict.NO


@dataclass(frozen=True)
class Instance:
    graph: Graph
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("budget k must be non-negative")


@dataclass(frozen=True)
class Modulator:
    t: frozenset[int]
    reduced_family: SetFamily
    circ_deletion: frozenset[int]


@dataclass(frozen=True)
class Splice:
    component: frozenset[int]
    removed: frozenset[int]
    size: int
    left: frozenset[int]
    right: frozenset[int]


# -- size functions -------------------------------------------------------


def delta(k: int) -> int:
    """Worst-case modulator size 8 * 8! * (k+1)^8 + k."""
    return 8 * math.factorial(8) * (k + 1) ** 8 + k


def epsilon(k: int, t_size: int | None = None) -> int:
    """Clique threshold (k+1)(|T|+2); |T| defaults to its worst case."""
    return (k + 1) * ((delta(k) if t_size is None else t_size) + 2)


def run_length(eps: int) -> int:
    return 2 * eps * eps + 32 * eps + 3


def zeta(t_size: int, eps: int) -> int:
    """Clique-path length threshold (|T|(8e+2)+1)(2e^2+32e+3)."""
    return (t_size * (8 * eps + 2) + 1) * run_length(eps)


def kernel_size_bound(k: int) -> int:
    eps = epsilon(k)
    return 2 * k * delta(k) * zeta(delta(k), eps) * eps


# -- modulator (rule "lemma3") ------------------------------------------------


def build_modulator(inst: Instance) -> Modulator | Verdict:
    """Modulator ``T`` for ``inst`` or ``NO`` when the instance is infeasible.

    The small obstruction family is streamed into the sunflower reduction;
    the remaining obstructions outside its union are destroyed by a minimum
    deletion set found with the exact solver.
    """
    g, k = inst.graph, inst.k
    sets = (obs.vertices for obs in iter_small_obstructions(g))
    family = reduce_preserving_minimal(sets, k, d=SMALL_SIZE_BOUND)
    family = SetFamily(family.sets, d=SMALL_SIZE_BOUND, universe=g.vertices)
    core = family.union()
    sol = solve(delete_vertices(g, core), k)
    if not sol.feasible:
        return NO
    t = core | sol.deletion_set
    log.debug("modulator |T|=%d family=%d k=%d", len(t), len(family), k)
    assert len(t) <= SMALL_SIZE_BOUND * len(family) + k <= delta(k)
    return Modulator(frozenset(t), family, sol.deletion_set)


def _outside(g: Graph, mod: Modulator) -> Graph:
    rest = delete_vertices(g, mod.t)
    if not is_proper_interval(rest):
        raise ValueError("modulator does not leave a proper interval graph")
    return rest


# -- irrelevant vertex (rule "lemma4") ----------------------------------------


def mark_clique(g: Graph, t, clique_order: list[int], k: int) -> frozenset[int]:
    """Marked vertices of a clique given in ordering order.

    Each vertex of ``t`` marks up to k+1 of its neighbours in the clique
    (smallest ids first); the first and last k+1 clique vertices are marked
    as well.
    """
    clique = frozenset(clique_order)
    marked: set[int] = set()
    for v in sorted(t):
        marked.update(sorted(g.neighbors(v) & clique)[: k + 1])
    marked.update(clique_order[: k + 1])
    marked.update(clique_order[-(k + 1) :])
    return frozenset(marked)


def irrelevant_vertex(inst: Instance, mod: Modulator) -> int | None:
    """A vertex of an oversized clique outside ``T`` whose deletion keeps the answer."""
    g, k = inst.graph, inst.k
    rest = _outside(g, mod)
    sigma = proper_interval_ordering(rest)
    if not sigma.order:
        return None
    i = max(range(len(sigma.order)), key=lambda j: (sigma.reach[j] - j, -j))
    clique_order = list(sigma.order[i : sigma.reach[i] + 1])
    if len(clique_order) <= epsilon(k, len(mod.t)):
        return None
    free = set(clique_order) - mark_clique(g, mod.t, clique_order, k)
    return min(free)


# -- forced vertices (rule "lemma6") ------------------------------------------


def _lonely_obstruction(g: Graph, outside: frozenset[int], x: int, claws_only: bool = False) -> bool:
    """Whether some small obstruction (claw) meets T only in ``x``."""
    h = induced_subgraph(g, outside | {x})
    if claws_only:
        return next(iter_claws(h), None) is not None
    return find_small_obstruction(h) is not None


def forced_vertices(inst: Instance, mod: Modulator) -> frozenset[int] | Verdict:
    """Vertices of ``T`` lying in a small obstruction whose other vertices avoid ``T``."""
    g, k = inst.graph, inst.k
    _outside(g, mod)
    outside = frozenset(g.vertices) - mod.t
    forced = frozenset(x for x in sorted(mod.t) if _lonely_obstruction(g, outside, x))
    if len(forced) > k:
        return NO
    return forced


# -- clique path shrinking (rule "lemma5") ------------------------------------


def find_splice(inst: Instance, mod: Modulator) -> Splice | None:
    g, k = inst.graph, inst.k
    rest = _outside(g, mod)
    outside = frozenset(rest.vertices)
    if any(_lonely_obstruction(g, outside, x, claws_only=True) for x in mod.t):
        raise ValueError("some claw has exactly one vertex in the modulator")
    sigma = proper_interval_ordering(rest)
    omega = max((r - i + 1 for i, r in maximal_clique_intervals(sigma)), default=0)
    if omega > epsilon(k, len(mod.t)):
        raise ValueError("clique outside the modulator exceeds the clique threshold")
    if omega == 0:
        return None

    eps = omega
    length = run_length(eps)
    q = 16 * eps + 1
    threshold = zeta(len(mod.t), eps)
    near_t = frozenset().union(*(g.neighbors(v) for v in mod.t)) if mod.t else frozenset()

    for comp in connected_components(rest):
        cp = clique_path(induced_subgraph(rest, comp))
        if len(cp) < threshold:
            continue
        run = 0
        start = None
        for j, c in enumerate(cp.cliques):
            run = 0 if c & near_t else run + 1
            if run == length:
                start = j - length + 1
                break
        if start is None:
            continue
        a, b = start + q, start + length - 1 - q
        size = min(len(cp.cliques[j] & cp.cliques[j + 1]) for j in range(a, b))
        removed = frozenset(v for v in comp if a < cp.span[v][0] and cp.span[v][1] < b)
        return Splice(comp, removed, size, cp.cliques[a], cp.cliques[b])
    return None


def shrink_clique_path(inst: Instance, mod: Modulator) -> Instance | None:
    """Equivalent instance with a long clique path shortened, or None."""
    sp = find_splice(inst, mod)
    if sp is None:
        return None
    g = splice_component(inst.graph, sp.component, sp.removed, sp.size, sp.left, sp.right)
    assert len(g) < len(inst.graph)
    return Instance(g, inst.k)


def t_component_degree(g: Graph, t) -> int:
    """Largest number of components outside ``t`` that a single ``t`` vertex touches."""
    t = frozenset(t)
    comps = connected_components(delete_vertices(g, t))
    owner = {v: i for i, c in enumerate(comps) for v in c}
    return max((len({owner[u] for u in g.neighbors(v) if u in owner}) for v in t), default=0)


# -- trace and driver -----------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    """One driver step. ``witness`` holds deleted vertices (or the
    component that triggered a verdict); splices also record the fresh
    clique and its attachment sets."""

    rule: str
    witness: tuple[int, ...]
    v_before: int
    v_after: int
    k_before: int
    k_after: int
    verdict: str | None = None
    added: tuple[int, ...] = ()
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    @property
    def is_reduction(self) -> bool:
        return self.verdict is None


@dataclass
class ReductionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def reductions(self) -> list[TraceStep]:
        return [s for s in self.steps if s.is_reduction]

    def replay(self, inst: Instance) -> Instance:
        """Apply the recorded reductions to ``inst``."""
        g, k = inst.graph, inst.k
        for s in self.reductions():
            if len(g) != s.v_before or k != s.k_before:
                raise ValueError(f"trace does not match instance at rule {s.rule}")
            if s.rule == "lemma5":
                comp = frozenset(s.witness) | frozenset(s.left) | frozenset(s.right)
                first = g.next_id
                g = splice_component(g, comp, s.witness, len(s.added), s.left, s.right)
                if tuple(range(first, g.next_id)) != s.added:
                    raise ValueError("replayed splice produced different vertex ids")
            else:
                g = delete_vertices(g, s.witness)
            k = s.k_after
        return Instance(g, k)


@dataclass(frozen=True)
class KernelOutcome:
    status: str
    instance: Instance
    trace: ReductionTrace

    @property
    def verdict(self) -> Verdict | None:
        return {"yes": Verdict.YES, "no": Verdict.NO}.get(self.status)


def trivial_no_instance() -> Instance:
    return Instance(claw_graph(), 0)


def _component_action(h: Graph, k: int):
    inst = Instance(h, k)
    mod = build_modulator(inst)
    if mod is NO:
        return ("lemma3", NO)
    v = irrelevant_vertex(inst, mod)
    if v is not None:
        return ("lemma4", (v,), 0)
    forced = forced_vertices(inst, mod)
    if forced is NO:
        return ("lemma6", NO)
    if forced:
        return ("lemma6", tuple(sorted(forced)), len(forced))
    sp = find_splice(inst, mod)
    if sp is not None:
        return ("lemma5", sp)
    return None


def kernelize(inst: Instance) -> KernelOutcome:
    """Reduce ``inst`` to an equivalent kernel or decide it outright."""
    g, k = inst.graph, inst.k
    trace = ReductionTrace()
    settled: set[tuple[Graph, int]] = set()

    def step(rule, witness, g_after, k_after, **extra):
        trace.steps.append(TraceStep(rule, tuple(sorted(witness)), len(g), len(g_after), k, k_after, **extra))
        log.debug("%s: |V| %d -> %d, k %d -> %d", rule, len(g), len(g_after), k, k_after)

    def verdict(rule, witness):
        step(rule, witness, g, k, verdict="NO")
        return KernelOutcome("no", trivial_no_instance(), trace)

    while True:
        hard = []
        for comp in connected_components(g):
            sub = induced_subgraph(g, comp)
            if is_proper_interval(sub):
                g2 = delete_vertices(g, comp)
                step("drop-component", comp, g2, k)
                g = g2
            else:
                hard.append(comp)
        if not hard:
            return KernelOutcome("yes", Instance(g, k), trace)
        if len(hard) > k:
            return verdict("component-count", ())

        changed = False
        for comp in hard:
            h = induced_subgraph(g, comp)
            if (h, k) in settled:
                continue
            action = _component_action(h, k)
            if action is None:
                settled.add((h, k))
                continue
            rule = action[0]
            if action[1] is NO:
                return verdict(rule, comp)
            if rule == "lemma5":
                sp = action[1]
                g2 = splice_component(g, sp.component, sp.removed, sp.size, sp.left, sp.right)
                added = tuple(range(g.next_id, g2.next_id))
                step(rule, sp.removed, g2, k, added=added, left=tuple(sorted(sp.left)), right=tuple(sorted(sp.right)))
                g = g2
            else:
                _, witness, dk = action
                g2 = delete_vertices(g, witness)
                step(rule, witness, g2, k - dk)
                g, k = g2, k - dk
            changed = True
            break
        if not changed:
            break

    assert len(g) <= kernel_size_bound(k)
    return KernelOutcome("reduced", Instance(g, k), trace)
