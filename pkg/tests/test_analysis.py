import json

import pytest
from hypothesis import given, settings, strategies as st

from gpdom.analysis import (DomSet, InvalidSet, NotApplicable, block, block_pattern, classify,
                            couple_number, fault_window, gamma_profile, gammas,
                            is_dominating, pseudo_couple_vertices, self_contained_blocks,
                            undominated)
from gpdom.construct import construct_fault_5k1, construct_fault_free
from gpdom.graph import FaultSpec, Vertex, build_graph, closed_neighborhood


def S_of(n, *tokens):
    return DomSet.from_tokens(n, tokens)


def oracle_dominates(g, S):
    covered = set()
    for v in S.vertices():
        covered |= closed_neighborhood(g, v)
    return covered >= set(g.vertices())


def test_domset_basics():
    S = S_of(6, "u0", "v3", "v4")
    assert len(S) == 3
    assert Vertex.inner(3) in S and Vertex.outer(3) not in S
    assert S.tokens() == ["u0", "v3", "v4"]
    assert S.add(Vertex.outer(1)).remove(Vertex.outer(0)).tokens() == ["u1", "v3", "v4"]
    assert S.sort_key() == (0, 9, 10)
    assert repr(S) == "{u0, v3, v4}"


def test_small_domination_examples():
    g = build_graph(6, 2, FaultSpec.outer(2))
    assert is_dominating(g, S_of(6, "u0", "v3", "v4"))
    g5 = build_graph(5)
    assert is_dominating(g5, S_of(5, "u0", "v2", "v3"))
    assert not is_dominating(g5, S_of(5, "u0", "u1"))
    assert {str(v) for v in undominated(g5, S_of(5, "u0"))} == {"u2", "u3", "v1", "v2", "v3", "v4"}


def test_deleted_member_is_rejected():
    g = build_graph(6, 2, "u0")
    with pytest.raises(InvalidSet):
        is_dominating(g, S_of(6, "u0", "v3", "v4"))


def test_block_partition():
    b = block(0, 10)
    assert len(b.vertices) == 10
    assert b.left | b.middle | b.right | {Vertex.outer(0)} == b.vertices
    assert {str(v) for v in b.left} == {"v9", "u8", "v8"}
    assert {str(v) for v in b.middle} == {"u9", "v0", "u1"}
    assert {str(v) for v in b.right} == {"v1", "u2", "v2"}
    assert {str(v) for v in b.right_fringe} == {"v3", "u3", "v4"}


def test_fault_window_and_couple_number():
    assert fault_window(0, 10) == [0, 1, 2, 8, 9]
    gam = [3, 2, 2, 2, 3, 3, 2, 3, 2, 2]
    # couples outside {8, 9, 0, 1, 2}: indices 3 and 6
    assert couple_number(gam, 0) == 2


@settings(max_examples=200, deadline=None)
@given(n=st.integers(3, 40), bits=st.integers(min_value=0))
def test_block_sum_identity(n, bits):
    S = DomSet(n, bits & ((1 << 2 * n) - 1))
    assert sum(gammas(S)) == 5 * len(S)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(5, 30), bits=st.integers(min_value=0), i=st.integers(0, 100))
def test_gamma_counts_block_members(n, bits, i):
    S = DomSet(n, bits & ((1 << 2 * n) - 1))
    i %= n
    assert gammas(S)[i] == len(block(i, n).vertices & set(S.vertices()))


@settings(max_examples=100, deadline=None)
@given(n=st.integers(3, 14), bits=st.integers(min_value=0), f=st.integers(0, 13))
def test_is_dominating_matches_set_oracle(n, bits, f):
    f %= n
    g = build_graph(n, 2, FaultSpec.outer(f))
    S = DomSet(n, bits & g.live)
    assert is_dominating(g, S) == oracle_dominates(g, S)


def test_classify_type_ii():
    g = build_graph(11, 2, "u0")
    S = construct_fault_5k1(2, 0)
    assert classify(g, S, FaultSpec.outer(0)) == "TypeII"
    # reflection about the fault keeps the tag
    R = S.map(lambda v: Vertex(v.ring, -v.index))
    assert classify(g, R, FaultSpec.outer(0)) == "TypeII"


def test_classify_special_tags():
    g = build_graph(10)
    assert classify(g, construct_fault_free(10), None) == "NoFault"
    assert classify(g, S_of(10, "u0"), None) == "NotTypeI"


@pytest.mark.parametrize("tag,tokens", [
    ("TypeIIIa", ["v9", "v1", "u2", "v2"]),
    ("TypeIIIb", ["u8", "v8", "u2", "v2"]),
    ("TypeIIIc", ["v8", "v9", "v1", "v2"]),
    ("TypeIIId", ["u8", "v8", "v1", "u2"]),
])
def test_type_iii_patterns(tag, tokens):
    n = 10
    # pad so every block has at least two members without touching B_0
    S = S_of(n, *tokens, "u4", "v4", "u5", "v5", "u6", "v6")
    g = build_graph(n, 2, "u0")
    assert block_pattern(S, 0) == {(t[0], int(t[1:]) if int(t[1:]) <= 2 else int(t[1:]) - n)
                                   for t in tokens}
    assert classify(g, S, FaultSpec.outer(0)) == tag


def test_self_contained_blocks_of_tiling():
    S = construct_fault_5k1(3, 0)
    # Type II core at B_0, self-contained blocks at f-5 and f-10
    assert sorted(self_contained_blocks(None, S)) == [(0 - 10) % 16, (0 - 5) % 16]


def test_profile_json_schema():
    S = construct_fault_5k1(2, 0)
    g = build_graph(11, 2, "u0")
    prof = gamma_profile(g, S, FaultSpec.outer(0))
    d = json.loads(prof.to_json())
    assert list(d) == ["gammas", "couple_number", "F", "type", "pseudo_couples", "self_contained"]
    assert d["type"] == "TypeII"
    assert d["F"] == [0, 1, 2, 9, 10]
    assert sum(d["gammas"]) == 5 * len(S)


def test_pseudo_couples_need_type():
    g = build_graph(10, 2, "u0")
    S = S_of(10, "u0")
    with pytest.raises(NotApplicable):
        pseudo_couple_vertices(g, S, FaultSpec.outer(0))
    with pytest.raises(NotApplicable):
        pseudo_couple_vertices(g, S, None)


def test_pseudo_couples_of_type_ii_set():
    g = build_graph(11, 2, "u0")
    S = construct_fault_5k1(2, 0)
    assert S.tokens() == ["u4", "u9", "v1", "v2", "v6", "v7"]
    # outside F = {9, 10, 0, 1, 2}, only column 4 has no inner member at 3, 4 or 5
    assert pseudo_couple_vertices(g, S, FaultSpec.outer(0)) == [4]
