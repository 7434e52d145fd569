"""Alteration-domination and bondage numbers by exhaustive removal search.

Run:  python3 demos/05_robustness.py
"""
from gpdom import alteration_number, bondage_number, single_edge_invariance

# mu: fewest vertex removals that change gamma.
for n in range(5, 13):
    rep = alteration_number(n, 2)
    print(f"n={n:<2} mu={rep.mu_exact if rep.mu_exact else '>=' + str(rep.mu_lower)}",
          rep.flags or "")

# Removing a single edge never changes gamma at these sizes.
print("single-edge invariance 5..12:", all(single_edge_invariance(n) for n in range(5, 13)))

# b: fewest edge removals that raise gamma.
for n in (5, 8, 9, 10):
    rep = bondage_number(n, 3)
    print(f"n={n:<2} b={rep.bondage_exact}  e.g. {rep.to_dict()['bondage']['witnesses'][0]}")
