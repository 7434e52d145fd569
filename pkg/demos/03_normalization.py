"""Rewriting minimum dominating sets into canonical form, one verified exchange at a time.

Run:  python3 demos/03_normalization.py
"""
import collections

from gpdom import FaultSpec, build_graph, enumerate_minimum_sets, normalize
from gpdom.analysis import gammas, meets_fault_neighborhood

fault = FaultSpec.outer(0)

# A minimum set of P(8,2) - u0 with a block holding a single vertex.
n = 8
g = build_graph(n, 2, fault)
sets = enumerate_minimum_sets(g)
print(f"P({n},2)-u0 has {len(sets)} minimum dominating sets of size {sets.gamma}")
S = next(S for S in sets if min(gammas(S)) == 1 and not meets_fault_neighborhood(S, 0))
print("start:", S, gammas(S))
res = normalize(g, S, fault)
for line in res.trace():
    print("  ", line)
print("end  :", res.set, res.tag)

# Every minimum set that avoids N(u0) ends in one of the catalogued types.
for n in range(5, 12):
    g = build_graph(n, 2, FaultSpec.outer(0))
    tags = collections.Counter(normalize(g, S, fault).tag for S in enumerate_minimum_sets(g)
                               if not meets_fault_neighborhood(S, 0))
    print(n, dict(tags))
