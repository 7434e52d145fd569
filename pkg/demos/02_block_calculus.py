"""Block profiles: how a dominating set spreads over the five-column blocks B_i.

Run:  python3 demos/02_block_calculus.py
"""
from gpdom import DomSet, FaultSpec, build_graph, classify, gamma_profile
from gpdom.analysis import block, gammas

n = 11
fault = FaultSpec.outer(0)
g = build_graph(n, 2, fault)

b = block(0, n)
print("B_0 left  :", sorted(map(str, b.left)))
print("B_0 middle:", sorted(map(str, b.middle)))
print("B_0 right :", sorted(map(str, b.right)))

# A size-6 dominating set of P(11,2) - u0 (one less than ceil(33/5) = 7).
S = DomSet.from_tokens(n, ["u4", "u9", "v1", "v2", "v6", "v7"])
gam = gammas(S)
print("gammas:", gam, " sum =", sum(gam), "= 5|S| =", 5 * len(S))

# Type II: B_f holds exactly {u_{f-2}, v_{f+1}, v_{f+2}}.
print("type:", classify(g, S, fault))
print(gamma_profile(g, S, fault).to_json())

# Mirroring about the fault gives the same type.
M = S.map(lambda v: v._replace(index=-v.index))
print("mirror:", M, classify(g, M, fault))
