"""Alteration-domination and bondage numbers of P(n, 2) by exhaustive search.

Removal sets are searched one representative per orbit of the dihedral
symmetry (rotations and reflections of the index ring).
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import GPGraph, InvalidParameter, Ring, Vertex, build_graph
from .solver import ceil_3n_5, dominates_within, solve_bnb, solve_dp


@dataclass
class RobustnessReport:
    n: int
    mu_exact: int | None = None
    mu_lower: int = 1
    mu_witnesses: list = field(default_factory=list)
    bondage_exact: int | None = None
    bondage_bounds: tuple[int, int | None] = (1, None)
    bondage_witnesses: list = field(default_factory=list)
    gamma: int | None = None
    solver_calls: int = 0
    complete: bool = True
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out: dict = {"n": self.n}
        if self.mu_exact is not None or self.mu_witnesses or self.mu_lower > 1:
            out["mu"] = {"exact": self.mu_exact, "lower": self.mu_lower,
                         "witnesses": [[str(v) for v in w] if len(w) > 1 else str(w[0])
                                       for w in self.mu_witnesses]}
        if self.bondage_exact is not None or self.bondage_bounds != (1, None):
            lo, hi = self.bondage_bounds
            out["bondage"] = {"low": lo, "high": hi, "exact": self.bondage_exact,
                              "witnesses": [[f"{a}-{b}" for a, b in w]
                                            for w in self.bondage_witnesses]}
        if self.flags:
            out["flags"] = self.flags
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _dihedral(n: int):
    return [(s, d) for s in (1, -1) for d in range(n)]


def _vkey(v: Vertex, s: int, d: int, n: int) -> int:
    i = (s * v.index + d) % n
    return i if v.ring is Ring.OUTER else n + i


def _canonical_vertices(X, n: int) -> bool:
    own = tuple(sorted(_vkey(v, 1, 0, n) for v in X))
    return all(own <= tuple(sorted(_vkey(v, s, d, n) for v in X))
               for s, d in _dihedral(n))


def _canonical_edges(E, n: int) -> bool:
    def key(s, d):
        return tuple(sorted(tuple(sorted((_vkey(a, s, d, n), _vkey(b, s, d, n))))
                            for a, b in E))
    own = key(1, 0)
    return all(own <= key(s, d) for s, d in _dihedral(n))


def _map(fn, items, jobs: int):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=8))
    return [fn(x) for x in items]


def _gamma_without_vertices(args) -> int:
    n, X = args
    return solve_bnb(GPGraph(n, 2, X)).gamma


def _exceeds_without_edges(args) -> bool:
    n, E, gamma = args
    return not dominates_within(GPGraph(n, 2, (), E), gamma)


def alteration_number(n: int, max_removals: int = 2, use_symmetry: bool = True,
                      budget: int | None = None, jobs: int = 1) -> RobustnessReport:
    """Least number of removed vertices (either ring) that changes gamma(P(n, 2))."""
    if n < 5 or max_removals < 1:
        raise InvalidParameter("need n >= 5 and max_removals >= 1")
    g = build_graph(n, 2)
    gamma = solve_dp(n).gamma
    rep = RobustnessReport(n, gamma=gamma)
    pool = g.vertices()
    for r in range(1, max_removals + 1):
        subsets = [X for X in itertools.combinations(pool, r)
                   if not use_symmetry or _canonical_vertices(X, n)]
        if budget is not None and rep.solver_calls + len(subsets) > budget:
            rep.complete = False
            rep.flags.append(f"budget of {budget} solver calls exhausted at r={r}")
            return rep
        values = _map(_gamma_without_vertices, [(n, X) for X in subsets], jobs)
        rep.solver_calls += len(subsets)
        hits = [X for X, val in zip(subsets, values) if val != gamma]
        if hits:
            for X in hits:
                # independent re-solve of each witness
                if solve_dp(n, deleted=X).gamma == gamma:
                    raise RuntimeError(f"witness {X} not reproduced by the DP engine")
            rep.mu_exact = r
            rep.mu_lower = r
            rep.mu_witnesses = [list(X) for X in hits]
            if r == 1 and n % 5 not in (1, 2):
                rep.flags.append("single-vertex removal changes gamma for n not 1, 2 mod 5: "
                                 + ", ".join(str(X[0]) for X in hits))
            inner = [X for X in hits if r == 1 and X[0].ring is Ring.INNER]
            if inner and n % 5 in (1, 2):
                rep.flags.append("inner-vertex removal also changes gamma: "
                                 + ", ".join(str(X[0]) for X in inner))
            return rep
        rep.mu_lower = r + 1
    return rep


def bondage_number(n: int, max_removals: int = 3, use_symmetry: bool = True,
                   budget: int | None = None, jobs: int = 1) -> RobustnessReport:
    """Least number of removed edges that increases gamma(P(n, 2))."""
    if n < 5 or max_removals < 1:
        raise InvalidParameter("need n >= 5 and max_removals >= 1")
    g = build_graph(n, 2)
    gamma = solve_dp(n).gamma
    rep = RobustnessReport(n, gamma=gamma)
    edges = g.edge_list()
    for r in range(1, max_removals + 1):
        subsets = [E for E in itertools.combinations(edges, r)
                   if not use_symmetry or _canonical_edges(E, n)]
        if budget is not None and rep.solver_calls + len(subsets) > budget:
            rep.complete = False
            rep.bondage_bounds = (r, None)
            rep.flags.append(f"budget of {budget} solver calls exhausted at r={r}")
            return rep
        flags = _map(_exceeds_without_edges, [(n, E, gamma) for E in subsets], jobs)
        rep.solver_calls += len(subsets)
        hits = [E for E, hit in zip(subsets, flags) if hit]
        if hits:
            for E in hits:
                if solve_bnb(GPGraph(n, 2, (), E)).gamma <= gamma:
                    raise RuntimeError(f"bondage witness {E} not reproduced")
            rep.bondage_exact = r
            rep.bondage_bounds = (r, r)
            rep.bondage_witnesses = [list(E) for E in hits]
            return rep
        rep.bondage_bounds = (r + 1, None)
    return rep


def single_edge_invariance(n: int) -> bool:
    """Whether deleting any single edge leaves gamma(P(n, 2)) = ceil(3n/5)."""
    g = build_graph(n, 2)
    target = ceil_3n_5(n)
    return all(solve_bnb(g.without(edges=[e])).gamma == target for e in g.edge_list())
