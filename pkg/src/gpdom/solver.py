"""Exact domination numbers: branch-and-bound, cyclic frontier DP, enumeration.

The two engines share nothing but the graph model, so each checks the other.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .analysis import DomSet, InvalidSet, is_dominating
from .graph import FaultSpec, GPGraph, InvalidParameter, Ring, as_fault, build_graph


class SizeLimitError(RuntimeError):
    """Instance exceeds the configured solver guard."""


class CertificateError(RuntimeError):
    """A solver produced a set that fails verification (a solver bug)."""


def ceil_3n_5(n: int) -> int:
    return -(-3 * n // 5)


def formula_value(n: int, faulted: bool = True) -> int:
    """Closed-form domination number of P(n,2), or of P(n,2) minus an outer vertex."""
    base = ceil_3n_5(n)
    if faulted and n % 5 in (1, 2):
        return base - 1
    return base


@dataclass
class SolveResult:
    gamma: int
    certificate: DomSet
    engine: str
    nodes_or_states: int = 0
    elapsed: float = 0.0
    n: int = 0
    k: int = 2
    fault: FaultSpec = field(default_factory=FaultSpec)
    verified: bool = False

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k,
                "fault": str(self.fault.faulted) if self.fault else None,
                "gamma": self.gamma, "set": self.certificate.tokens(),
                "engine": self.engine, "verified": self.verified}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _fault_of(g: GPGraph) -> FaultSpec:
    if len(g.deleted_vertices) == 1 and not g.deleted_edges:
        return FaultSpec(next(iter(g.deleted_vertices)))
    return FaultSpec()


def _checked(g: GPGraph, S: DomSet, gamma: int) -> None:
    if len(S) != gamma or not is_dominating(g, S):
        raise CertificateError(f"certificate {S} fails for {g} (claimed {gamma})")


# ---------------------------------------------------------------------------
# branch and bound

def _popcount(x: int) -> int:
    return bin(x).count("1")


def _lowest(x: int) -> int:
    return (x & -x).bit_length() - 1


def _lower_bound(undom: int, closed, forbidden: int) -> int:
    """Greedy packing of undominated vertices with pairwise-disjoint dominator sets."""
    used = 0
    packed = 0
    m = undom
    while m:
        x = _lowest(m)
        m &= m - 1
        dom = closed[x] & ~forbidden
        if not dom & used:
            used |= dom
            packed += 1
    return max(packed, -(-_popcount(undom) // 4))


def _greedy(g: GPGraph) -> int:
    closed, live = g.closed, g.live
    chosen = covered = 0
    while covered != live:
        best, gain = -1, -1
        m = live
        while m:
            s = _lowest(m)
            m &= m - 1
            c = _popcount(closed[s] & ~covered)
            if c > gain:
                best, gain = s, c
        chosen |= 1 << best
        covered |= closed[best]
    return chosen


class _Search:
    """Branch on the lowest undominated vertex over its allowed dominators.

    Dominators tried earlier in a branch are forbidden in later siblings, so
    each dominating set is reached at most once.
    """

    def __init__(self, g: GPGraph):
        self.g = g
        self.closed = g.closed
        self.live = g.live
        self.nodes = 0

    def _order(self, x: int, covered: int, forbidden: int) -> list[int]:
        cands = []
        m = self.closed[x] & ~forbidden
        while m:
            y = _lowest(m)
            m &= m - 1
            cands.append((-_popcount(self.closed[y] & ~covered), y))
        cands.sort()
        return [y for _, y in cands]

    def minimize(self, incumbent: int) -> tuple[int, int]:
        self.best = _popcount(incumbent)
        self.best_set = incumbent
        self._min(0, 0, 0, 0)
        return self.best, self.best_set

    def _min(self, chosen: int, size: int, covered: int, forbidden: int) -> None:
        self.nodes += 1
        undom = self.live & ~covered
        if not undom:
            if size < self.best:
                self.best, self.best_set = size, chosen
            return
        if size + _lower_bound(undom, self.closed, forbidden) >= self.best:
            return
        x = _lowest(undom)
        for y in self._order(x, covered, forbidden):
            self._min(chosen | 1 << y, size + 1, covered | self.closed[y], forbidden)
            forbidden |= 1 << y

    def enumerate(self, target: int) -> list[int]:
        self.found: list[int] = []
        self._enum(0, 0, 0, 0, target)
        return self.found

    def _enum(self, chosen, size, covered, forbidden, target) -> None:
        self.nodes += 1
        undom = self.live & ~covered
        if not undom:
            if size == target:
                self.found.append(chosen)
            return
        if size + _lower_bound(undom, self.closed, forbidden) > target:
            return
        x = _lowest(undom)
        m = self.closed[x] & ~forbidden
        while m:
            y = _lowest(m)
            m &= m - 1
            self._enum(chosen | 1 << y, size + 1, covered | self.closed[y],
                       forbidden, target)
            forbidden |= 1 << y


def solve_bnb(g: GPGraph, limit: int = 60, force: bool = False) -> SolveResult:
    """Exact domination number of ``g`` by branch-and-bound."""
    if g.num_vertices > limit and not force:
        raise SizeLimitError(f"{g} has {g.num_vertices} live vertices (limit {limit})")
    t0 = time.perf_counter()
    incumbent = _greedy(g)
    if g.k == 2 and g.is_pristine:
        from .construct import construct_fault_free
        seeded = construct_fault_free(g.n).bits
        if _popcount(seeded) < _popcount(incumbent):
            incumbent = seeded
    search = _Search(g)
    gamma, bits = search.minimize(incumbent)
    cert = DomSet(g.n, bits)
    _checked(g, cert, gamma)
    return SolveResult(gamma, cert, "BnB", search.nodes, time.perf_counter() - t0,
                       g.n, g.k, _fault_of(g), True)


def dominates_within(g: GPGraph, size: int) -> bool:
    """Whether g has a dominating set with at most ``size`` vertices."""
    incumbent = _greedy(g)
    if _popcount(incumbent) <= size:
        return True
    search = _Search(g)
    search.best, search.best_set = size + 1, 0
    search._min(0, 0, 0, 0)
    return search.best <= size


class MinimumSets(list):
    """All minimum dominating sets (possibly truncated), in lexicographic order."""

    gamma: int = 0
    truncated: bool = False


def enumerate_minimum_sets(g: GPGraph, cap: int | None = None,
                           limit: int = 24, force: bool = False) -> MinimumSets:
    if g.num_vertices > limit and not force:
        raise SizeLimitError(f"{g} has {g.num_vertices} live vertices (limit {limit})")
    gamma = solve_bnb(g, force=True).gamma
    search = _Search(g)
    found = search.enumerate(gamma)
    sets = sorted((DomSet(g.n, b) for b in found), key=DomSet.sort_key)
    out = MinimumSets(sets if cap is None else sets[:cap])
    out.gamma = gamma
    out.truncated = cap is not None and len(sets) > cap
    return out


# ---------------------------------------------------------------------------
# cyclic frontier dynamic program for P(n, 2)
#
# After closing column i the frontier is (u_i, v_i, v_{i-1}); each entry is
# IN (in S), DOM (outside S, dominated or deleted) or UND (outside S, not yet
# dominated).  Adding column j = i+1 closes the edges u_i u_j, u_j v_j and
# v_{i-1} v_j, after which u_i and v_{i-1} have all their edges and must not
# be UND.  The cycle is closed by starting from a guessed frontier for column
# -1 and requiring the frontier after column n-1 to equal the guess.

IN, DOM, UND = 0, 1, 2
_NSTATES = 27
_INF = np.iinfo(np.int32).max // 4


def _enc(a: int, b: int, c: int) -> int:
    return a * 9 + b * 3 + c


def _dec(s: int) -> tuple[int, int, int]:
    return s // 9, (s // 3) % 3, s % 3


@lru_cache(maxsize=None)
def _transfer(u_dead: bool, v_dead: bool) -> tuple[np.ndarray, np.ndarray]:
    """Min-plus transfer matrix for one column and the chosen (u, v) per edge."""
    T = np.full((_NSTATES, _NSTATES), _INF, dtype=np.int64)
    choice = np.full((_NSTATES, _NSTATES), -1, dtype=np.int8)
    for s in range(_NSTATES):
        a, b, c = _dec(s)
        for x in (0, 1):
            if x and u_dead:
                continue
            for y in (0, 1):
                if y and v_dead:
                    continue
                if x:
                    nu = IN
                elif u_dead or a == IN or y:
                    nu = DOM
                else:
                    nu = UND
                if y:
                    nv = IN
                elif v_dead or x or c == IN:
                    nv = DOM
                else:
                    nv = UND
                if a == UND and not x:
                    continue
                if c == UND and not y:
                    continue
                t = _enc(nu, nv, b)
                T[s, t] = x + y
                choice[s, t] = 2 * x + y
    T.setflags(write=False)
    choice.setflags(write=False)
    return T, choice


def _column_kinds(n: int, deleted) -> list[tuple[bool, bool]]:
    dead = {(v.ring, v.index % n) for v in deleted}
    return [((Ring.OUTER, j) in dead, (Ring.INNER, j) in dead) for j in range(n)]


def _dp_gamma(kinds) -> tuple[int, int]:
    """Best cyclic value and the start frontier achieving it."""
    D = np.full((_NSTATES, _NSTATES), _INF, dtype=np.int64)
    np.fill_diagonal(D, 0)
    for kind in kinds:
        T = _transfer(*kind)[0]
        D = (D[:, :, None] + T[None, :, :]).min(axis=1)
        np.minimum(D, _INF, out=D)
    diag = np.diagonal(D)
    seed = int(np.argmin(diag))
    return int(diag[seed]), seed


def _dp_trace(kinds, seed: int) -> list[int]:
    """Per-column choices (2*u + v) of one optimal lap starting from ``seed``."""
    d = np.full(_NSTATES, _INF, dtype=np.int64)
    d[seed] = 0
    back = []
    for kind in kinds:
        T = _transfer(*kind)[0]
        cand = d[:, None] + T
        arg = cand.argmin(axis=0)
        d = np.minimum(cand[arg, np.arange(_NSTATES)], _INF)
        back.append(arg)
    state = seed
    choices = []
    for kind, arg in zip(reversed(kinds), reversed(back)):
        prev = int(arg[state])
        choices.append(int(_transfer(*kind)[1][prev, state]))
        state = prev
    choices.reverse()
    return choices


def solve_dp(n: int, fault: FaultSpec | None = None, deleted=()) -> SolveResult:
    """Exact domination number of P(n, 2) minus vertex faults, by cyclic DP."""
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")
    fault = as_fault(fault)
    t0 = time.perf_counter()
    dead = list(deleted)
    if fault:
        dead.append(fault.faulted)
    g = build_graph(n, 2, fault) if fault and not deleted else GPGraph(n, 2, dead)
    kinds = _column_kinds(n, dead)
    gamma, seed = _dp_gamma(kinds)
    choices = _dp_trace(kinds, seed)
    bits = 0
    for j, ch in enumerate(choices):
        if ch & 2:
            bits |= 1 << j
        if ch & 1:
            bits |= 1 << (n + j)
    cert = DomSet(n, bits)
    _checked(g, cert, gamma)
    return SolveResult(gamma, cert, "CyclicDP", n * _NSTATES * _NSTATES,
                       time.perf_counter() - t0, n, 2, _fault_of(g), True)


# ---------------------------------------------------------------------------
# certificate checking

@dataclass
class CertificateReport:
    dominating: bool
    size_matches: bool
    window_ok: bool | None
    window: tuple[int, int] | None
    problems: list[str]

    @property
    def ok(self) -> bool:
        return self.dominating and self.size_matches and self.window_ok is not False

    def to_dict(self) -> dict:
        return {"dominating": self.dominating, "size_matches": self.size_matches,
                "window_ok": self.window_ok,
                "window": list(self.window) if self.window else None,
                "problems": self.problems, "ok": self.ok}


def verify_certificate(g: GPGraph, S: DomSet, claimed: int) -> CertificateReport:
    problems = []
    try:
        dominating = is_dominating(g, S)
        if not dominating:
            problems.append("set does not dominate the graph")
    except InvalidSet as exc:
        dominating = False
        problems.append(str(exc))
    size_ok = len(S) == claimed
    if not size_ok:
        problems.append(f"|S| = {len(S)} but claimed {claimed}")
    window = window_ok = None
    single_outer = (len(g.deleted_vertices) == 1 and not g.deleted_edges
                    and next(iter(g.deleted_vertices)).ring is Ring.OUTER)
    if g.k == 2 and single_outer:
        c = ceil_3n_5(g.n)
        window = (c - 1, c)
        window_ok = c - 1 <= claimed <= c
        if not window_ok:
            problems.append(f"claimed {claimed} outside [{c - 1}, {c}]")
    return CertificateReport(dominating, size_ok, window_ok, window, problems)
