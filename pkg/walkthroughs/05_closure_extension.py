"""
Closure operators from partial data
===================================

An operator given only on a union-closed family extends to a closure on all
subsets; the fixed points are the closed sets of a topology.
"""

# %%
import random

from vdlogic.topo import (
    KuratowskiLike, check_kuratowski, extend_kuratowski, points_of, random_kuratowski_like,
)

# family {∅, {0}, X} with the identity operator
k = KuratowskiLike(2, {0b00: 0b00, 0b01: 0b01, 0b11: 0b11})
cl, space = extend_kuratowski(k)
for a, c in enumerate(cl):
    print(points_of(a), "->", points_of(c))
print(space)

# %%
rng = random.Random(0)
bad = 0
for _ in range(1000):
    k = random_kuratowski_like(rng.randint(1, 4), rng)
    cl, _ = extend_kuratowski(k)
    bad += not check_kuratowski(k.n, cl) or any(cl[f] != h for f, h in k.hat.items())
print("failures:", bad)
