"""Kernelization with a replayable trace.

The driver applies reduction rules until none fires: it drops proper
interval components, forces vertices in too many obstructions, removes a
vertex from an oversized clique, shortens long clique paths and splices
away long paths hanging off the modulator. Every step is recorded.

Run: python demos/04_kernelize.py
"""

import random
from collections import Counter

from pivd import emit_trace, kernelize, parse_trace, solve
from pivd.generate import big_clique_instance, generate_instance, long_cycle_instance, star_instance



def firing(build, rule, rng):
    while True:
        inst = build(rng)
        if any(s.rule == rule for s in kernelize(inst).trace.steps):
            return inst


rng = random.Random(5)
cases = [
    ("planted noise", generate_instance(40, 2, seed=1)),
    ("big clique", firing(big_clique_instance, "lemma4", rng)),
    ("star", firing(star_instance, "lemma6", rng)),
    ("long hole", long_cycle_instance(rng)),
]
for name, inst in cases:
    out = kernelize(inst)
    rules = Counter(s.rule for s in out.trace.steps)
    print(f"{name}: {len(inst.graph)} vertices, k={inst.k} -> status {out.status},"
          f" {len(out.instance.graph)} vertices, k={out.instance.k}")
    print("  rules applied:", dict(rules))
    before = solve(inst.graph, inst.k).feasible
    after = {"yes": True, "no": False}.get(out.status)
    if after is None:
        after = solve(out.instance.graph, out.instance.k).feasible
    print(f"  answer before {before}, after {after}")
    if out.status == "reduced":
        assert out.trace.replay(inst) == out.instance

out = kernelize(cases[1][1])
blob = emit_trace(out.trace)
print()
print("First lines of the JSON-lines trace:")
for line in blob.decode().splitlines()[:3]:
    print(" ", line[:110])
trace, _ = parse_trace(blob)
print("Round trip equal:", trace == out.trace)
