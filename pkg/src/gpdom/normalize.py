"""Size-preserving rewrites of minimum dominating sets of P(n, 2) - u_f.

Each rewrite is a single exchange ``S - x + y`` that is re-verified before it
is accepted; a rewrite that the block calculus promises but that fails the
check raises :class:`Contradiction` instead of being applied silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import (TYPE_II, TYPE_III, DomSet, NotApplicable, block_pattern,
                       classify, couple_number, fault_neighbors, fault_window, frame_vertex,
                       gammas, meets_fault_neighborhood,
                       is_dominating, is_type_2_or_3)
from .graph import FaultSpec, GPGraph, Ring, Vertex, as_fault


class InvalidExchange(ValueError):
    pass


class RejectedExchange(ValueError):
    pass


class NormalizationError(RuntimeError):
    pass


class Contradiction(NormalizationError):
    """A rewrite guaranteed by the block calculus was not possible."""


class InfeasiblePattern(NormalizationError):
    pass


RULES = ("Exchange", "TypeI-Fix", "CoupleReduce", "Fig2b→a", "Fig2c→a",
         "Fig2d→IIId", "Fig3e→II", "Fig3f→II", "Fig3g→II")


@dataclass(frozen=True)
class RewriteStep:
    removed: Vertex
    added: Vertex
    rule: str
    gammas_after: tuple[int, ...] = ()

    def trace_line(self) -> str:
        prof = ",".join(map(str, self.gammas_after))
        return f"{self.rule} removed={self.removed} added={self.added} gamma_profile_after=[{prof}]"


def exchange(g: GPGraph, S: DomSet, x: Vertex, y: Vertex) -> DomSet:
    """Return S - x + y when N[x] stays dominated and the result dominates g."""
    x, y = x.reduced(g.n), y.reduced(g.n)
    if x not in S:
        raise InvalidExchange(f"{x} is not in the set")
    if y in S:
        raise InvalidExchange(f"{y} is already in the set")
    if not g.is_live(y):
        raise InvalidExchange(f"{y} is not a live vertex")
    T = S.remove(x).add(y)
    covered = 0
    for s in T.slots():
        covered |= g.closed[s]
    nx = g.closed[g.slot(x)]
    if covered & nx != nx or covered & g.live != g.live:
        raise RejectedExchange(f"S - {x} + {y} loses domination")
    return T


def _fault(fault) -> int:
    fault = as_fault(fault)
    if not fault.is_outer:
        raise NotApplicable("normalization needs an outer faulty vertex")
    return fault.index


def _touches_fault(g: GPGraph, f: int, y: Vertex) -> bool:
    return y == Vertex(Ring.OUTER, f) or y in fault_neighbors(f, g.n)


def _avoids_fault(g: GPGraph, S: DomSet, f: int) -> bool:
    return not meets_fault_neighborhood(S, f)


def _scan_order(f: int, n: int) -> list[int]:
    return [(f + 3 + t) % n for t in range(n)]


def _step(g, S, x, y, rule, steps) -> DomSet:
    T = exchange(g, S, x, y)
    steps.append(RewriteStep(x.reduced(g.n), y.reduced(g.n), rule, tuple(gammas(T))))
    return T


def to_type1(g: GPGraph, S: DomSet, fault: FaultSpec | None) -> tuple[DomSet, list[RewriteStep]]:
    """Rewrite S until every block holds at least two members."""
    f = _fault(fault)
    n = g.n
    if not _avoids_fault(g, S, f):
        raise NotApplicable("S meets N(u_f)")
    steps: list[RewriteStep] = []
    ones = sum(1 for x in gammas(S) if x <= 1)
    while ones:
        if len(steps) > n:
            raise Contradiction("Type I repair did not terminate within n steps")
        gam = gammas(S)
        i = next(j for j in _scan_order(f, n) if gam[j] <= 1)
        if Vertex(Ring.OUTER, i) not in S:
            raise Contradiction(f"gamma_{i} = {gam[i]} but u_{i} is not in S")
        for sign in (1, -1):
            add = frame_vertex("u", 2, i, sign, n)
            rem = frame_vertex("u", 3, i, sign, n)
            if _touches_fault(g, f, add) or rem.index == f:
                continue
            try:
                S = _step(g, S, rem, add, "TypeI-Fix", steps)
                break
            except (InvalidExchange, RejectedExchange):
                continue
        else:
            raise Contradiction(f"no admissible Type I repair at block {i} of {S}")
        now = sum(1 for x in gammas(S) if x <= 1)
        if now >= ones:
            raise Contradiction(f"Type I repair at block {i} did not reduce the count")
        ones = now
    return S, steps


def _left_count(S: DomSet, f: int, sign: int) -> int:
    pat = block_pattern(S, f, sign)
    return sum(1 for p in pat if p in {("u", -2), ("v", -2), ("v", -1)})


# (pattern in the oriented frame, vertex removed, vertex added, rule)
_FIG2 = (
    (frozenset({("u", -2), ("u", 2), ("v", 2)}), ("u", 2), ("v", 1), "Fig2b→a"),
    (frozenset({("v", -1), ("v", 1), ("v", 2)}), ("v", -1), ("u", -2), "Fig2c→a"),
    (frozenset({("v", -1), ("u", 2), ("v", 2)}), ("u", -3), ("u", -2), "Fig2d→IIId"),
)
_FIG3 = (
    (frozenset({("u", -2), ("v", 1), ("v", 2), ("u", 2)}), ("u", 2), ("u", 3), "Fig3e→II"),
    (frozenset({("u", -2), ("v", -2), ("v", 1), ("v", 2)}), ("v", -2), ("v", -4), "Fig3f→II"),
    (frozenset({("v", -2), ("v", -1), ("v", 1), ("u", 2)}), ("v", 1), ("v", 3), "Fig3g→II"),
)


def to_canonical_type(g: GPGraph, S: DomSet, fault: FaultSpec | None,
                      trace: list | None = None) -> tuple[DomSet, str]:
    """Rewrite a Type I set into a Type II or Type III(a-d) set."""
    f = _fault(fault)
    n = g.n
    gam = gammas(S)
    if min(gam) < 2:
        raise NotApplicable("S is not a Type I set")
    if not _avoids_fault(g, S, f):
        raise NotApplicable("S meets N(u_f)")
    steps = trace if trace is not None else []
    tag = classify(g, S, fault)
    if tag == "TypeII" or tag.startswith("TypeIII"):
        return S, tag

    if gam[f] == 3:
        signs = [s for s in (1, -1) if _left_count(S, f, s) == 1]
        if not signs:
            raise InfeasiblePattern(f"gamma_f = 3 but neither side of B_{f} holds one member")
        table, expected = _FIG2, ("TypeII", "TypeIIId")
    elif gam[f] == 4:
        signs = [1, -1]
        table, expected = _FIG3, ("TypeII",)
    else:
        T = _lower_fault_block(g, S, f, steps)
        return to_canonical_type(g, T, fault, steps)

    for sign in signs:
        pat = block_pattern(S, f, sign)
        for want, (rr, rd), (ar, ad), rule in table:
            if pat != want:
                continue
            rem = frame_vertex(rr, rd, f, sign, n)
            add = frame_vertex(ar, ad, f, sign, n)
            try:
                T = _step(g, S, rem, add, rule, steps)
            except (InvalidExchange, RejectedExchange) as exc:
                raise Contradiction(f"{rule} on {S}: {exc}") from exc
            new_tag = classify(g, T, fault)
            if new_tag not in expected or not _avoids_fault(g, T, f):
                raise Contradiction(f"{rule} on {S} produced {new_tag}")
            return T, new_tag
    pats = sorted(block_pattern(S, f, 1))
    raise InfeasiblePattern(f"B_{f} & S = {pats} (gamma_f = {gam[f]}) matches no known pattern")


def _lower_fault_block(g: GPGraph, S: DomSet, f: int, steps: list) -> DomSet:
    """One verified exchange moving a member out of B_f while staying Type I.

    Needed when gamma_f >= 5, which the Type II/III catalogue does not cover.
    """
    n = g.n
    gf = gammas(S)[f]
    inside = [v for v in S.vertices() if (v.index - f) % n in (0, 1, 2, n - 1, n - 2)]
    for x in inside:
        for y in g.vertices():
            if y in S or _touches_fault(g, f, y):
                continue
            try:
                T = exchange(g, S, x, y)
            except (InvalidExchange, RejectedExchange):
                continue
            gam = gammas(T)
            if min(gam) >= 2 and gam[f] < gf and _avoids_fault(g, T, f):
                steps.append(RewriteStep(x, y, "Exchange", tuple(gam)))
                return T
    raise InfeasiblePattern(f"gamma_f = {gf} and no exchange lowers it for {S}")


def reduce_couples(g: GPGraph, S: DomSet, fault: FaultSpec | None
                   ) -> tuple[DomSet, list[RewriteStep]]:
    """Remove couples whose block has no nearby inner vertex, one exchange at a time."""
    f = _fault(fault)
    n = g.n
    tag = classify(g, S, fault)
    if not is_type_2_or_3(tag):
        raise NotApplicable(f"S is {tag}, not Type II/III")
    window = set(fault_window(f, n))
    steps: list[RewriteStep] = []
    stuck: set[int] = set()
    while True:
        gam = gammas(S)
        inner = [(S.bits >> (n + j)) & 1 for j in range(n)]
        todo = [i for i in _scan_order(f, n) if i not in window and i not in stuck
                and gam[i] == 2
                and not (inner[(i - 1) % n] or inner[i] or inner[(i + 1) % n])]
        if not todo:
            return S, steps
        i = todo[0]
        if Vertex(Ring.OUTER, i) not in S:
            raise Contradiction(f"gamma_{i} = 2 with no inner vertex nearby but u_{i} not in S")
        left = {frame_vertex(r, d, i, 1, n) for r, d in (("u", -2), ("v", -2), ("u", -1))}
        sign = 1 if any(v in S for v in left) else -1
        add = frame_vertex("u", 2, i, sign, n)
        rem = frame_vertex("u", 3, i, sign, n)
        before = couple_number(gam, f)
        try:
            if _touches_fault(g, f, add):
                raise RejectedExchange("would add a neighbour of u_f")
            T = exchange(g, S, rem, add)
        except (InvalidExchange, RejectedExchange):
            stuck.add(i)
            continue
        new_tag = classify(g, T, fault)
        if not is_type_2_or_3(new_tag) or couple_number(gammas(T), f) != before - 1:
            stuck.add(i)
            continue
        S = T
        steps.append(RewriteStep(rem, add, "CoupleReduce", tuple(gammas(S))))


@dataclass
class Normalized:
    set: DomSet
    tag: str
    steps: list[RewriteStep] = field(default_factory=list)

    def trace(self) -> list[str]:
        return [s.trace_line() for s in self.steps]


def normalize(g: GPGraph, S: DomSet, fault: FaultSpec | None) -> Normalized:
    """Type I repair, canonical Type II/III form, then couple reduction.

    Every intermediate set is checked to dominate and to keep its size.
    """
    size = len(S)
    steps: list[RewriteStep] = []
    S, st = to_type1(g, S, fault)
    steps += st
    S, tag = to_canonical_type(g, S, fault, steps)
    S, st = reduce_couples(g, S, fault)
    steps += st
    S, tag = to_canonical_type(g, S, fault, steps)
    if len(S) != size or not is_dominating(g, S):
        raise NormalizationError("normalization changed the size or lost domination")
    return Normalized(S, tag, steps)
