"""Domination numbers of P(n, 2), with and without a faulty outer vertex.

Run:  python3 demos/01_domination_numbers.py
"""
from gpdom import FaultSpec, build_graph, solve_bnb, solve_dp
from gpdom.solver import ceil_3n_5, formula_value

# The cyclic DP sweeps the ring column by column; one call per n.
print("n   ceil(3n/5)  gamma  gamma(-u0)  formula")
for n in range(5, 26):
    g0 = solve_dp(n).gamma
    gf = solve_dp(n, FaultSpec.outer(0)).gamma
    print(f"{n:<3} {ceil_3n_5(n):^10}  {g0:^5}  {gf:^10}  {formula_value(n):^7}")

# Losing u_0 helps exactly when n is 1 or 2 mod 5.
drops = [n for n in range(5, 101) if solve_dp(n, FaultSpec.outer(0)).gamma < ceil_3n_5(n)]
print("n in [5, 100] where the fault lowers gamma:", drops[:8], "...")

# The branch-and-bound engine is independent of the DP; on small graphs they agree.
g = build_graph(11, 2, "u0")
a, b = solve_bnb(g), solve_dp(11, FaultSpec.outer(0))
print("P(11,2)-u0:", a.gamma, a.certificate, "|", b.gamma, b.certificate)
print(b.to_json())

# Inner faults have no closed form; the solvers still answer.
print("P(12,2)-v0:", solve_dp(12, FaultSpec(build_graph(12).vertex(12))).gamma)
