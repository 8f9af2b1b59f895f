"""Recognizing proper interval graphs and explaining rejections.

Run: python demos/01_recognition.py
"""

import random

from pivd import (
    clique_path,
    connected_components,
    find_any_hole,
    find_small_obstruction,
    induced_subgraph,
    maximum_clique,
    proper_interval_ordering,
)
from pivd.generate import unit_interval_graph
from pivd.graph import claw_graph, cycle_graph, net_graph, tent_graph

rng = random.Random(0)
g = unit_interval_graph(12, rng, density=3.0)
sigma = proper_interval_ordering(g)
print("A random unit interval graph on 12 vertices, 12 intervals placed on a line.")
print("  ordering:", sigma.order)
print("  every vertex sees a contiguous block of the ordering, e.g.")
for v in sigma.order[:3]:
    print(f"    N[{v}] -> positions {sorted(sigma.position[u] for u in g.closed_neighbors(v))}")
print("  maximum clique:", sorted(maximum_clique(g)))

comp = max(connected_components(g), key=len)
cp = clique_path(induced_subgraph(g, comp))
print(f"  its largest component has {len(cp)} maximal cliques along a path:")
for c in cp.cliques:
    print("    ", sorted(c))

print()
print("Graphs that are not proper interval come with a certificate:")
for name, h in [("claw", claw_graph()), ("net", net_graph()), ("tent", tent_graph()), ("C6", cycle_graph(6))]:
    obs = find_small_obstruction(h)
    print(f"  {name:5s} -> {obs.kind} on {sorted(obs.vertices)}")

big = cycle_graph(15)
print("  C15 has no small obstruction:", find_small_obstruction(big))
print("  but a hole search finds", find_any_hole(big).hole_length, "vertices")
