import pytest
from hypothesis import given, settings, strategies as st

from gpdom.graph import (FaultSpec, GPGraph, InvalidEdge, InvalidFault, InvalidParameter,
                         InvalidVertex, Ring, Vertex, as_fault, build_graph,
                         closed_neighborhood, format_vertex, parse_edge, parse_vertex,
                         reflect, rotate)

from oracles import petersen_adjacency


def as_sets(g):
    return {str(v): {str(w) for w in g.neighbors(v)} for v in g.vertices()}


def oracle_sets(n, k=2, deleted=(), deleted_edges=()):
    adj = petersen_adjacency(n, k, deleted, deleted_edges)
    return {f"{r}{i}": {f"{a}{b}" for a, b in nb} for (r, i), nb in adj.items()}


@pytest.mark.parametrize("n", range(3, 16))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_adjacency_matches_textbook_edge_list(n, k):
    if k >= n:
        pytest.skip("chord length must be below n")
    assert as_sets(GPGraph(n, k)) == oracle_sets(n, k)


@pytest.mark.parametrize("n", range(5, 30))
def test_pristine_p_n_2_is_cubic_with_3n_edges(n):
    g = build_graph(n)
    assert g.num_vertices == 2 * n
    assert g.num_edges == 3 * n
    assert all(g.degree(v) == 3 for v in g.vertices())


def test_small_cases_collapse_multi_edges():
    # P(4,2): v_i v_{i+2} and v_{i+2} v_i coincide
    g = build_graph(4)
    assert g.num_edges == 10
    assert g.degree(Vertex.inner(0)) == 2
    # P(3,2): v chords form a triangle
    assert build_graph(3).num_edges == 9


def test_fault_removes_vertex_and_its_edges():
    g = build_graph(10, 2, "u3")
    assert g.num_vertices == 19
    assert g.num_edges == 27
    assert not g.is_live(Vertex.outer(3))
    assert g.degree(Vertex.outer(2)) == 2
    assert g.degree(Vertex.inner(3)) == 2
    with pytest.raises(InvalidVertex):
        g.neighbors(Vertex.outer(3))


def test_deleted_edges():
    e = parse_edge("u0-u1")
    g = build_graph(7, 2, deleted_edges=[e])
    assert g.num_edges == 20
    assert Vertex.outer(1) not in g.neighbors(Vertex.outer(0))
    assert as_sets(g) == oracle_sets(7, 2, deleted_edges=[e])
    with pytest.raises(InvalidEdge):
        build_graph(7, 2, deleted_edges=[parse_edge("u0-u2")])


def test_without_accumulates():
    g = build_graph(9).without([Vertex.outer(0)]).without(edges=[parse_edge("v1-v3")])
    assert g.deleted_vertices == {Vertex.outer(0)}
    assert len(g.deleted_edges) == 1
    assert as_sets(g) == oracle_sets(9, 2, [Vertex.outer(0)], [parse_edge("v1-v3")])


def test_graph_is_immutable_and_hashable():
    g = build_graph(6)
    with pytest.raises(AttributeError):
        g.n = 7
    assert g == build_graph(6)
    assert len({g, build_graph(6), build_graph(6, 2, "u0")}) == 2


@pytest.mark.parametrize("bad", [2, 0, -1, 3.5, "5"])
def test_invalid_n(bad):
    with pytest.raises(InvalidParameter):
        build_graph(bad)


def test_invalid_fault():
    with pytest.raises(InvalidFault):
        build_graph(6, 2, "u6")


@pytest.mark.parametrize("tok,expect", [("u3", Vertex(Ring.OUTER, 3)), (" v0 ", Vertex(Ring.INNER, 0)),
                                        ("u12", Vertex(Ring.OUTER, 12))])
def test_parse_vertex(tok, expect):
    assert parse_vertex(tok) == expect


@pytest.mark.parametrize("tok", ["w1", "u", "u-1", "3", "uv2", ""])
def test_parse_vertex_rejects(tok):
    with pytest.raises(InvalidVertex):
        parse_vertex(tok)


def test_parse_reduces_modulo_n_and_formats():
    assert parse_vertex("u13", 10) == Vertex.outer(3)
    assert format_vertex(Vertex.inner(0)) == "v0"
    assert format_vertex(Vertex.inner(0), one_based=True) == "v1"


def test_fault_spec():
    assert not FaultSpec.none()
    f = as_fault("u4")
    assert f.is_outer and f.index == 4 and str(f) == "u4"
    assert not as_fault(Vertex.inner(1)).is_outer
    with pytest.raises(InvalidFault):
        FaultSpec().index


def test_closed_neighborhood():
    g = build_graph(8)
    assert closed_neighborhood(g, Vertex.inner(0)) == {
        Vertex.inner(0), Vertex.outer(0), Vertex.inner(2), Vertex.inner(6)}


@settings(max_examples=60, deadline=None)
@given(n=st.integers(5, 25), d=st.integers(-30, 30), c=st.integers(0, 30),
       mirror=st.booleans())
def test_rotation_and_reflection_are_automorphisms(n, d, c, mirror):
    g = build_graph(n)
    m = (lambda v: reflect(v, c, n)) if mirror else (lambda v: rotate(v, d, n))
    for v in g.vertices():
        assert {m(w) for w in g.neighbors(v)} == g.neighbors(m(v))


@settings(max_examples=40, deadline=None)
@given(n=st.integers(3, 20), data=st.data())
def test_random_deletions_match_oracle(n, data):
    verts = build_graph(n).vertices()
    dv = data.draw(st.lists(st.sampled_from(verts), max_size=4, unique=True))
    edges = build_graph(n).edge_list()
    de = data.draw(st.lists(st.sampled_from(edges), max_size=3, unique=True))
    g = GPGraph(n, 2, dv, de)
    assert as_sets(g) == oracle_sets(n, 2, dv, de)
