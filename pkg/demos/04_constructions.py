"""Explicit optimal sets: the period-5 pattern and the fault-tolerant families.

Run:  python3 demos/04_constructions.py
"""
from gpdom import FaultSpec, build_graph, construct_fault_5k1, construct_fault_5k2
from gpdom import construct_fault_free, is_dominating
from gpdom.analysis import gammas

for n in (10, 11, 12, 13, 14):
    S = construct_fault_free(n)
    print(f"P({n},2): {len(S)} vertices", S)

# n = 5k+1: Type II core at the fault plus k-1 self-contained blocks.
S = construct_fault_5k1(3, 0)
print("5k+1, k=3:", S, "gammas", gammas(S))

# n = 5k+2: the same plus one seam vertex v_{f+3}.
S = construct_fault_5k2(3, 0)
print("5k+2, k=3:", S, "gammas", gammas(S), "sum", sum(gammas(S)))

# Any fault position works; the pattern is rotated along.
for f in (0, 5, 13):
    S = construct_fault_5k1(3, f)
    print(f"fault u{f}:", is_dominating(build_graph(16, 2, FaultSpec.outer(f)), S), S)
