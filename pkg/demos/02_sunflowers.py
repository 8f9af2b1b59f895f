"""Sunflowers and the hitting-set reduction.

A family of small sets with many members must contain a sunflower: sets
that pairwise meet in the same core. Any hitting set of size at most k
that misses the core must hit every petal, so with k+2 petals one of them
can be dropped without changing the minimal hitting sets of size <= k.

Run: python demos/02_sunflowers.py
"""

import random

from pivd import SetFamily, find_sunflower, minimal_hitting_sets, reduce_preserving_minimal
from pivd.hitting_set import sunflower_bound

star = SetFamily([{1, 2}, {1, 3}, {1, 4}, {1, 5}], d=2)
s = find_sunflower(star, 3)
print("Sets through a common element:", [sorted(x) for x in star])
print("  3-petal sunflower: core", sorted(s.core), "petals", [sorted(p) for p in s.petals])
r = reduce_preserving_minimal(star, 1)
print("  reduced for k=1:", [sorted(x) for x in r])
print("  minimal hitting sets of size <= 1 before/after:",
      [sorted(h) for h in minimal_hitting_sets(star, 1)], [sorted(h) for h in minimal_hitting_sets(r, 1)])

print()
rng = random.Random(7)
d, k = 3, 2
family = SetFamily({frozenset(rng.sample(range(18), 3)) for _ in range(300)}, d=d)
reduced = reduce_preserving_minimal(family, k)
print(f"A random family of {len(family)} triples over 18 elements, k={k}:")
print(f"  kept {len(reduced)} sets (guaranteed at most {sunflower_bound(d, k + 2)})")
same = minimal_hitting_sets(family, k) == minimal_hitting_sets(reduced, k)
print("  minimal hitting sets of size <= 2 unchanged:", same)
