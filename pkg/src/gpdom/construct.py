"""Explicit optimal dominating sets for P(n, 2), with and without a faulty outer vertex.

Every set is checked with :func:`is_dominating` before it is returned.
"""

from __future__ import annotations

from .analysis import DomSet, is_dominating
from .graph import FaultSpec, InvalidParameter, Ring, Vertex, build_graph

U, V = Ring.OUTER, Ring.INNER


class ConstructionError(RuntimeError):
    pass


# Period-5 tile of the fault-free pattern, and the tail patches that close the
# cycle for n = 5q + r.  Residue 3 needs a different tile altogether: the
# standard tile admits no optimal splice there (checked exhaustively up to a
# 15-column patch), while {u0, v1, u2} plus {v_{5q-1}, u_{5q}} is optimal.
_TILE = ((U, 0), (V, 2), (V, 3))
_TILE_R3 = ((U, 0), (V, 1), (U, 2))
_PATCH = {
    1: ((U, 0), (U, 1), (V, 3), (V, 4)),
    2: ((U, 0), (U, 1), (U, 2), (V, 4), (V, 5)),
    4: ((U, 0), (V, 1), (U, 2), (U, 4), (V, 6), (V, 7)),
}
_SMALL = {3: ((U, 0), (V, 0)), 4: ((U, 0), (V, 1), (U, 2))}


def _tiled(count: int, tile, start: int = 0) -> list[Vertex]:
    return [Vertex(r, start + 5 * j + o) for j in range(count) for r, o in tile]


def _checked(n: int, vertices, fault: FaultSpec | None = None) -> DomSet:
    S = DomSet.from_vertices(n, vertices)
    g = build_graph(n, 2, fault)
    if (fault and fault.faulted in S) or not is_dominating(g, S):
        raise ConstructionError(f"constructed set {S} does not dominate {g}")
    return S


def construct_fault_free(n: int) -> DomSet:
    """A dominating set of P(n, 2) of size ceil(3n/5)."""
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")
    q, r = divmod(n, 5)
    if n in _SMALL:
        vs = [Vertex(ring, o) for ring, o in _SMALL[n]]
    elif r == 0:
        vs = _tiled(q, _TILE)
    elif r == 3:
        vs = _tiled(q, _TILE_R3) + [Vertex(V, 5 * q - 1), Vertex(U, 5 * q)]
    else:
        vs = _tiled(q - 1, _TILE) + [Vertex(ring, 5 * (q - 1) + o) for ring, o in _PATCH[r]]
    S = _checked(n, vs)
    if len(S) != -(-3 * n // 5):
        raise ConstructionError(f"constructed set for n={n} has size {len(S)}")
    return S


def _fault_core(k: int, f: int) -> list[Vertex]:
    """Type II core at B_f plus k-1 self-contained blocks B_{f-5}, ..., B_{f-5(k-1)}."""
    vs = [Vertex(U, f - 2), Vertex(V, f + 1), Vertex(V, f + 2)]
    for x in range(1, k):
        c = f - 5 * x
        vs += [Vertex(U, c - 2), Vertex(V, c), Vertex(V, c + 1)]
    return vs


def construct_fault_5k1(k: int, f: int = 0) -> DomSet:
    """Size-3k dominating set of P(5k+1, 2) minus u_f."""
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"k must be an integer >= 1, got {k!r}")
    n = 5 * k + 1
    return _checked(n, _fault_core(k, f), FaultSpec.outer(f % n))


# Seam candidates for the extra inner vertex when n = 5k+2, tried in order.
_SEAM_5K2 = ((V, 3), (V, 4), (U, 3), (U, 4))


def construct_fault_5k2(k: int, f: int = 0) -> DomSet:
    """Size-(3k+1) dominating set of P(5k+2, 2) minus u_f."""
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"k must be an integer >= 1, got {k!r}")
    n = 5 * k + 2
    fault = FaultSpec.outer(f % n)
    core = _fault_core(k, f)
    for ring, d in _SEAM_5K2:
        try:
            return _checked(n, core + [Vertex(ring, f + d)], fault)
        except ConstructionError:
            continue
    raise ConstructionError(f"no seam vertex completes the n={n} construction")


def construct(n: int, fault: FaultSpec | None = None) -> DomSet:
    """Best explicit construction for P(n, 2), optionally minus an outer vertex."""
    if not fault:
        return construct_fault_free(n)
    if not fault.is_outer:
        raise InvalidParameter("explicit constructions cover outer faults only")
    f = fault.index
    if n % 5 == 1 and n > 5:
        return construct_fault_5k1(n // 5, f)
    if n % 5 == 2 and n > 5:
        return construct_fault_5k2(n // 5, f)
    # Fault-free pattern rotated so the faulty vertex is not used.
    base = construct_fault_free(n)
    g = build_graph(n, 2, fault)
    for d in range(n):
        S = base.map(lambda v: Vertex(v.ring, v.index + d))
        if fault.faulted not in S and is_dominating(g, S):
            return S
    raise ConstructionError(f"no rotation of the fault-free pattern avoids {fault.faulted}")
