"""Generalized Petersen graphs P(n, k) with deleted vertices and edges.

Vertices live in a fixed array of 2n slots: outer vertices ``u0..u{n-1}``
occupy slots ``0..n-1`` and inner vertices ``v0..v{n-1}`` occupy slots
``n..2n-1``.  Neighbourhoods are stored as integer bitmaps over those slots.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Base class for invalid graph construction or queries."""


class InvalidParameter(GraphError):
    pass


class InvalidFault(GraphError):
    pass


class InvalidEdge(GraphError):
    pass


class InvalidVertex(GraphError):
    pass


class Ring(enum.Enum):
    OUTER = "u"
    INNER = "v"


class Vertex(NamedTuple):
    ring: Ring
    index: int

    @classmethod
    def outer(cls, i: int) -> "Vertex":
        return cls(Ring.OUTER, i)

    @classmethod
    def inner(cls, i: int) -> "Vertex":
        return cls(Ring.INNER, i)

    def reduced(self, n: int) -> "Vertex":
        return Vertex(self.ring, self.index % n)

    def __str__(self) -> str:
        return f"{self.ring.value}{self.index}"

    def __repr__(self) -> str:
        return str(self)


_TOKEN = re.compile(r"^\s*([uv])(\d+)\s*$")


def parse_vertex(token: str, n: int | None = None) -> Vertex:
    """Parse ``u3`` / ``v0`` into a vertex; reduce modulo ``n`` when given."""
    m = _TOKEN.match(token)
    if not m:
        raise InvalidVertex(f"not a vertex token: {token!r}")
    v = Vertex(Ring(m.group(1)), int(m.group(2)))
    return v.reduced(n) if n is not None else v


def format_vertex(v: Vertex, one_based: bool = False) -> str:
    return f"{v.ring.value}{v.index + 1 if one_based else v.index}"


def rotate(v: Vertex, d: int, n: int) -> Vertex:
    return Vertex(v.ring, (v.index + d) % n)


def reflect(v: Vertex, center: int, n: int) -> Vertex:
    return Vertex(v.ring, (2 * center - v.index) % n)


@dataclass(frozen=True)
class FaultSpec:
    """Optional faulty vertex; the theory covers outer faults only."""

    faulted: Vertex | None = None

    @classmethod
    def outer(cls, f: int) -> "FaultSpec":
        return cls(Vertex.outer(f))

    @classmethod
    def none(cls) -> "FaultSpec":
        return cls(None)

    def __bool__(self) -> bool:
        return self.faulted is not None

    @property
    def is_outer(self) -> bool:
        return self.faulted is not None and self.faulted.ring is Ring.OUTER

    @property
    def index(self) -> int:
        if self.faulted is None:
            raise InvalidFault("no faulty vertex")
        return self.faulted.index

    def __str__(self) -> str:
        return str(self.faulted) if self.faulted is not None else "none"


def as_fault(fault) -> FaultSpec:
    """Accept a FaultSpec, a Vertex, a token string, or None."""
    if fault is None:
        return FaultSpec()
    if isinstance(fault, FaultSpec):
        return fault
    if isinstance(fault, Vertex):
        return FaultSpec(fault)
    if isinstance(fault, str):
        return FaultSpec(parse_vertex(fault))
    raise TypeError(f"cannot interpret {fault!r} as a fault")


def pristine_edges(n: int, k: int) -> frozenset[tuple[int, int]]:
    """Edge set of P(n, k) as sorted slot pairs, deduplicated, loops dropped."""
    edges = set()
    for i in range(n):
        for a, b in ((i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)):
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return frozenset(edges)


class GPGraph:
    """Immutable P(n, k) minus a set of vertices and a set of edges."""

    __slots__ = ("n", "k", "deleted_vertices", "deleted_edges", "edges",
                 "live", "nbr", "closed", "_frozen")

    def __init__(self, n: int, k: int, deleted_vertices: Iterable[Vertex] = (),
                 deleted_edges: Iterable[tuple[Vertex, Vertex]] = ()):
        if not isinstance(n, int) or n < 3:
            raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")
        if not isinstance(k, int) or k < 1:
            raise InvalidParameter(f"k must be an integer >= 1, got {k!r}")
        self.n = n
        self.k = k

        dv = set()
        for v in deleted_vertices:
            if not 0 <= v.index < n:
                raise InvalidFault(f"vertex {v} out of range for n={n}")
            dv.add(v)
        base = pristine_edges(n, k)
        de = set()
        for a, b in deleted_edges:
            for x in (a, b):
                if not 0 <= x.index < n:
                    raise InvalidEdge(f"edge endpoint {x} out of range for n={n}")
            sa, sb = self._slot(a), self._slot(b)
            e = (min(sa, sb), max(sa, sb))
            if e not in base:
                raise InvalidEdge(f"{a}-{b} is not an edge of P({n},{k})")
            de.add(e)

        self.deleted_vertices = frozenset(dv)
        dead = {self._slot(v) for v in dv}
        self.deleted_edges = frozenset(de)
        self.edges = frozenset(e for e in base - de
                               if e[0] not in dead and e[1] not in dead)
        self.live = ((1 << 2 * n) - 1) & ~sum(1 << s for s in dead)
        nbr = [0] * (2 * n)
        for a, b in self.edges:
            nbr[a] |= 1 << b
            nbr[b] |= 1 << a
        self.nbr = tuple(nbr)
        self.closed = tuple((nbr[s] | (1 << s)) if (self.live >> s) & 1 else 0
                            for s in range(2 * n))
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False):
            raise AttributeError("GPGraph is immutable")
        object.__setattr__(self, name, value)

    def _slot(self, v: Vertex) -> int:
        return v.index if v.ring is Ring.OUTER else self.n + v.index

    def slot(self, v: Vertex) -> int:
        if not 0 <= v.index < self.n:
            raise InvalidVertex(f"{v} out of range for n={self.n}")
        return self._slot(v)

    def vertex(self, slot: int) -> Vertex:
        if slot < self.n:
            return Vertex(Ring.OUTER, slot)
        return Vertex(Ring.INNER, slot - self.n)

    def is_live(self, v: Vertex) -> bool:
        return 0 <= v.index < self.n and bool((self.live >> self._slot(v)) & 1)

    @property
    def is_pristine(self) -> bool:
        return not self.deleted_vertices and not self.deleted_edges

    @property
    def num_vertices(self) -> int:
        return bin(self.live).count("1")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[Vertex]:
        return [self.vertex(s) for s in range(2 * self.n) if (self.live >> s) & 1]

    def edge_list(self) -> list[tuple[Vertex, Vertex]]:
        return [(self.vertex(a), self.vertex(b)) for a, b in sorted(self.edges)]

    def neighbors(self, v: Vertex) -> set[Vertex]:
        if not self.is_live(v):
            raise InvalidVertex(f"{v} is not a live vertex")
        return set(self._expand(self.nbr[self._slot(v)]))

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def _expand(self, mask: int) -> list[Vertex]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.vertex(low.bit_length() - 1))
            mask ^= low
        return out

    def without(self, vertices: Iterable[Vertex] = (),
                edges: Iterable[tuple[Vertex, Vertex]] = ()) -> "GPGraph":
        """A new graph with further vertices and/or edges deleted."""
        extra_e = list(edges)
        old_e = [(self.vertex(a), self.vertex(b)) for a, b in self.deleted_edges]
        return GPGraph(self.n, self.k, set(self.deleted_vertices) | set(vertices),
                       old_e + extra_e)

    def __eq__(self, other):
        return (isinstance(other, GPGraph) and (self.n, self.k) == (other.n, other.k)
                and self.deleted_vertices == other.deleted_vertices
                and self.deleted_edges == other.deleted_edges)

    def __hash__(self):
        return hash((self.n, self.k, self.deleted_vertices, self.deleted_edges))

    def __repr__(self) -> str:
        extra = ""
        if self.deleted_vertices:
            extra += " - {" + ",".join(sorted(map(str, self.deleted_vertices))) + "}"
        if self.deleted_edges:
            extra += f" - {len(self.deleted_edges)} edge(s)"
        return f"P({self.n},{self.k}){extra}"


def build_graph(n: int, k: int = 2, fault: FaultSpec | Vertex | str | None = None,
                deleted_edges: Iterable[tuple[Vertex, Vertex]] = ()) -> GPGraph:
    """Build P(n, k), optionally with one faulty vertex and deleted edges."""
    fault = as_fault(fault)
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")
    if fault and not 0 <= fault.index < n:
        raise InvalidFault(f"fault {fault} out of range for n={n}")
    dv = [fault.faulted] if fault else []
    return GPGraph(n, k, dv, deleted_edges)


def closed_neighborhood(g: GPGraph, v: Vertex) -> set[Vertex]:
    """N[v] over live vertices and live edges."""
    if not g.is_live(v):
        raise InvalidVertex(f"{v} is deleted or out of range")
    return set(g._expand(g.closed[g._slot(v)]))


def edge_token(a: Vertex, b: Vertex) -> str:
    return f"{a}-{b}"


def parse_edge(token: str, n: int | None = None) -> tuple[Vertex, Vertex]:
    a, _, b = token.partition("-")
    return parse_vertex(a, n), parse_vertex(b, n)
