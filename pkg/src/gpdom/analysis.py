"""Block calculus for dominating sets of P(n, 2) with a faulty outer vertex.

A block ``B_i`` is the set of the five consecutive columns ``i-2 .. i+2``
(each column being the pair ``u_j, v_j``).  ``gamma_i(S) = |B_i & S|``.
Around the fault ``f`` the window ``F = {f-2, ..., f+2}`` is special.

Patterns inside a block are written as sets of ``(ring, offset)`` pairs
relative to the block centre, e.g. ``("u", -2)`` is ``u_{i-2}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .graph import FaultSpec, GPGraph, Ring, Vertex, as_fault


class AnalysisError(ValueError):
    pass


class InvalidSet(AnalysisError):
    pass


class NotApplicable(AnalysisError):
    pass


@dataclass(frozen=True)
class DomSet:
    """Candidate dominating set as a bitmap over the 2n vertex slots."""

    n: int
    bits: int = 0

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[Vertex]) -> "DomSet":
        bits = 0
        for v in vertices:
            v = v.reduced(n)
            bits |= 1 << (v.index if v.ring is Ring.OUTER else n + v.index)
        return cls(n, bits)

    @classmethod
    def from_tokens(cls, n: int, tokens: Iterable[str]) -> "DomSet":
        from .graph import parse_vertex
        return cls.from_vertices(n, (parse_vertex(t, n) for t in tokens))

    def _slot(self, v: Vertex) -> int:
        i = v.index % self.n
        return i if v.ring is Ring.OUTER else self.n + i

    def __contains__(self, v: Vertex) -> bool:
        return bool((self.bits >> self._slot(v)) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        return iter(self.vertices())

    def slots(self) -> list[int]:
        out, m = [], self.bits
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def vertices(self) -> list[Vertex]:
        n = self.n
        return [Vertex(Ring.OUTER, s) if s < n else Vertex(Ring.INNER, s - n)
                for s in self.slots()]

    def add(self, v: Vertex) -> "DomSet":
        return DomSet(self.n, self.bits | (1 << self._slot(v)))

    def remove(self, v: Vertex) -> "DomSet":
        return DomSet(self.n, self.bits & ~(1 << self._slot(v)))

    def map(self, fn) -> "DomSet":
        return DomSet.from_vertices(self.n, (fn(v) for v in self.vertices()))

    def tokens(self) -> list[str]:
        return [str(v) for v in self.vertices()]

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.slots())

    def __repr__(self) -> str:
        return "{" + ", ".join(self.tokens()) + "}"


def is_dominating(g: GPGraph, S: DomSet) -> bool:
    """True iff every live vertex is in S or adjacent to a member of S."""
    if S.bits & ~g.live:
        bad = DomSet(S.n, S.bits & ~g.live)
        raise InvalidSet(f"set contains deleted vertices {bad}")
    covered = 0
    for s in S.slots():
        covered |= g.closed[s]
    return covered & g.live == g.live


def undominated(g: GPGraph, S: DomSet) -> list[Vertex]:
    covered = 0
    for s in S.slots():
        covered |= g.closed[s]
    return g._expand(g.live & ~covered)


@dataclass(frozen=True)
class Block:
    center: int
    vertices: frozenset
    left: frozenset
    middle: frozenset
    right: frozenset
    right_fringe: frozenset
    left_fringe: frozenset


def block(i: int, n: int) -> Block:
    """B_i and its partition into L_i, M_i, R_i, u_i plus the outward fringes."""
    if n < 3:
        raise AnalysisError("n must be >= 3")
    u = lambda j: Vertex(Ring.OUTER, (i + j) % n)  # noqa: E731
    v = lambda j: Vertex(Ring.INNER, (i + j) % n)  # noqa: E731
    cols = range(-2, 3)
    return Block(
        center=i % n,
        vertices=frozenset([u(j) for j in cols] + [v(j) for j in cols]),
        left=frozenset({v(-1), u(-2), v(-2)}),
        middle=frozenset({u(-1), v(0), u(1)}),
        right=frozenset({v(1), u(2), v(2)}),
        right_fringe=frozenset({v(3), u(3), v(4)}),
        left_fringe=frozenset({v(-3), u(-3), v(-4)}),
    )


def column_counts(S: DomSet) -> list[int]:
    n = S.n
    return [((S.bits >> j) & 1) + ((S.bits >> (n + j)) & 1) for j in range(n)]


def gammas(S: DomSet) -> list[int]:
    # Counted column by column so every member lands in exactly five blocks,
    # also for n < 5 where blocks wrap onto themselves.
    c = column_counts(S)
    n = S.n
    return [sum(c[(i + d) % n] for d in range(-2, 3)) for i in range(n)]


def fault_window(f: int, n: int) -> list[int]:
    return sorted({(f + d) % n for d in range(-2, 3)})


def couple_number(gam: list[int], f: int) -> int:
    n = len(gam)
    window = set(fault_window(f, n))
    return sum(1 for i, x in enumerate(gam) if x == 2 and i not in window)


# Block patterns relative to the fault, in the orientation with |L_f & S| <= |R_f & S|.
TYPE_II = frozenset({("u", -2), ("v", 1), ("v", 2)})
TYPE_III = {
    "TypeIIIa": frozenset({("v", -1), ("v", 1), ("u", 2), ("v", 2)}),
    "TypeIIIb": frozenset({("u", -2), ("v", -2), ("u", 2), ("v", 2)}),
    "TypeIIIc": frozenset({("v", -2), ("v", -1), ("v", 1), ("v", 2)}),
    "TypeIIId": frozenset({("u", -2), ("v", -2), ("v", 1), ("u", 2)}),
}
SELF_CONTAINED = frozenset({("u", -2), ("v", 0), ("v", 1)})

TYPE_TAGS = ("NotTypeI", "TypeI", "TypeII", "TypeIIIa", "TypeIIIb",
             "TypeIIIc", "TypeIIId", "NoFault")


def frame_vertex(ring: str, d: int, center: int, sign: int, n: int) -> Vertex:
    """Vertex at offset ``d`` from ``center``; ``sign=-1`` reads the ring mirrored."""
    return Vertex(Ring(ring), (center + sign * d) % n)


def block_pattern(S: DomSet, center: int, sign: int = 1) -> frozenset:
    n = S.n
    return frozenset((r, d) for d in range(-2, 3) for r in ("u", "v")
                     if frame_vertex(r, d, center, sign, n) in S)


def _fault_index(fault) -> int | None:
    fault = as_fault(fault)
    return fault.index if fault.is_outer else None


def classify(g: GPGraph, S: DomSet, fault: FaultSpec | None) -> str:
    """Type tag of S relative to an outer fault, invariant under reflection about f."""
    gam = gammas(S)
    if min(gam) <= 1:
        return "NotTypeI"
    f = _fault_index(fault)
    if f is None:
        return "NoFault"
    gf = gam[f]
    for sign in (1, -1):
        pat = block_pattern(S, f, sign)
        if gf == 3 and pat == TYPE_II:
            return "TypeII"
        if gf == 4:
            for tag, p in TYPE_III.items():
                if pat == p:
                    return tag
    return "TypeI"


def is_type_2_or_3(tag: str) -> bool:
    return tag == "TypeII" or tag.startswith("TypeIII")


def pseudo_couple_vertices(g: GPGraph, S: DomSet, fault: FaultSpec | None,
                           require_type: bool = True) -> list[int]:
    """Indices i outside F whose columns i-1, i, i+1 carry no inner vertex of S."""
    f = _fault_index(fault)
    if f is None:
        raise NotApplicable("pseudo-couple vertices need an outer fault")
    if require_type and not is_type_2_or_3(classify(g, S, fault)):
        raise NotApplicable("S is not a Type II or Type III set")
    n = S.n
    window = set(fault_window(f, n))
    inner = [(S.bits >> (n + j)) & 1 for j in range(n)]
    return [i for i in range(n) if i not in window
            and not (inner[(i - 1) % n] or inner[i] or inner[(i + 1) % n])]


def self_contained_blocks(g: GPGraph, S: DomSet) -> list[int]:
    return [i for i in range(S.n) if block_pattern(S, i) == SELF_CONTAINED]


@dataclass
class BlockProfile:
    gammas: list[int]
    couple_number: int
    fault_window: list[int]
    type_tag: str
    pseudo_couples: list[int] = field(default_factory=list)
    self_contained: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"gammas": self.gammas, "couple_number": self.couple_number,
                "F": self.fault_window, "type": self.type_tag,
                "pseudo_couples": self.pseudo_couples,
                "self_contained": self.self_contained}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def gamma_profile(g: GPGraph, S: DomSet, fault: FaultSpec | None = None) -> BlockProfile:
    gam = gammas(S)
    f = _fault_index(fault)
    tag = classify(g, S, fault)
    if f is None:
        return BlockProfile(gam, 0, [], tag, [], self_contained_blocks(g, S))
    pcs = pseudo_couple_vertices(g, S, fault, require_type=False) if is_type_2_or_3(tag) else []
    return BlockProfile(gam, couple_number(gam, f), fault_window(f, S.n), tag,
                        pcs, self_contained_blocks(g, S))


def fault_neighbors(f: int, n: int) -> list[Vertex]:
    """N(u_f) in the pristine P(n, 2)."""
    return [Vertex(Ring.OUTER, (f - 1) % n), Vertex(Ring.OUTER, (f + 1) % n),
            Vertex(Ring.INNER, f % n)]


def meets_fault_neighborhood(S: DomSet, f: int) -> bool:
    return any(v in S for v in fault_neighbors(f, S.n))
