"""Exact deletion to a proper interval graph.

The branching solver picks an obstruction, tries deleting each of its
vertices and prunes with a lower bound from disjoint obstructions. A
brute-force search over all subsets serves as a reference on small graphs.

Run: python demos/03_solver.py
"""

import random
import time

from pivd import brute_force_solve, delete_vertices, is_proper_interval, minimum_deletion, solve
from pivd.generate import generate_instance, random_graph
from pivd.graph import net_graph, tent_graph

for name, g in [("net", net_graph()), ("tent", tent_graph())]:
    print(f"{name}: minimum deletion count {minimum_deletion(g, 3)}, e.g. {sorted(solve(g, 1).deletion_set)}")

rng = random.Random(3)
g = random_graph(12, 0.4, rng)
for k in range(4):
    a, b = solve(g, k), brute_force_solve(g, k)
    print(f"random G(12, 0.4), k={k}: branching says {a.feasible}, brute force says {b.feasible}")
    if a.feasible:
        rest = delete_vertices(g, a.deletion_set)
        print(f"  deleting {sorted(a.deletion_set)} leaves a proper interval graph: {is_proper_interval(rest)}")
        break

inst = generate_instance(200, 4, seed=11)
start = time.perf_counter()
sol = solve(inst.graph, inst.k)
print(f"planted instance, 204 vertices, k=4: solved in {time.perf_counter() - start:.2f}s,"
      f" deletion set {sorted(sol.deletion_set)}")
