"""Dual-containing Theta-cyclic codes of length 6 over R with F_9, generators of degree <= 2.

About 20k generator combinations; takes one to two minutes on one core.
"""

from collections import Counter

from skewcodec import CodeContext, GF, search

F = GF(3, 2, [2, 2, 1])
F.powers = True
ctx = CodeContext(F, 1)
found = search(ctx, 0, 6, deg_t=range(0, 3), budget=10**6)
print(len(found), "candidates")
print(Counter((c.n, c.k, c.d) for c in found).most_common())
nontrivial = [c for c in found if c.d > 1]
for c in nontrivial[:3]:
    print(c.to_json())
