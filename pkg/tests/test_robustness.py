import json

import pytest

from gpdom.graph import GPGraph, InvalidParameter, Ring, Vertex, build_graph
from gpdom.robustness import alteration_number, bondage_number, single_edge_invariance
from gpdom.solver import ceil_3n_5, solve_bnb

from oracles import brute_gamma, petersen_adjacency


@pytest.mark.parametrize("n", [6, 7, 11, 12])
def test_mu_is_one_for_residues_1_and_2(n):
    rep = alteration_number(n, 1)
    assert rep.mu_exact == 1
    assert any(w[0].ring is Ring.OUTER for w in rep.mu_witnesses)


@pytest.mark.parametrize("n", [5, 8, 9, 10, 13, 14])
def test_single_removal_never_changes_gamma_otherwise(n):
    rep = alteration_number(n, 1)
    assert rep.mu_exact is None and rep.mu_lower == 2
    assert not rep.flags


def test_inner_removal_flag_for_residue_2():
    # deleting v_0 also lowers gamma when n = 5k + 2; reported, not hidden
    rep = alteration_number(7, 1)
    assert {str(w[0]) for w in rep.mu_witnesses} == {"u0", "v0"}
    assert any("inner" in f for f in rep.flags)


@pytest.mark.parametrize("n,expect", [(5, None), (8, 2), (9, 2), (10, None)])
def test_mu_with_two_removals(n, expect):
    rep = alteration_number(n, 2)
    assert rep.mu_exact == expect
    assert rep.mu_lower == (2 if expect else 3)
    for w in rep.mu_witnesses:
        assert solve_bnb(GPGraph(n, 2, w)).gamma != ceil_3n_5(n)


def test_mu_witnesses_agree_with_brute_force():
    rep = alteration_number(8, 2)
    for w in rep.mu_witnesses:
        assert brute_gamma(petersen_adjacency(8, deleted=w)) != 5


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_symmetry_reduction_finds_the_same_minimum(n):
    a = alteration_number(n, 2)
    b = alteration_number(n, 2, use_symmetry=False)
    assert a.mu_exact == b.mu_exact and a.mu_lower == b.mu_lower
    assert len(a.mu_witnesses) <= len(b.mu_witnesses)
    c = bondage_number(n, 2)
    d = bondage_number(n, 2, use_symmetry=False)
    assert c.bondage_bounds == d.bondage_bounds


@pytest.mark.parametrize("n", [5, 8, 9, 10])
def test_bondage_is_three(n):
    rep = bondage_number(n, 3)
    assert rep.bondage_exact == 3 and rep.bondage_bounds == (3, 3)
    for w in rep.bondage_witnesses:
        g = build_graph(n, 2, deleted_edges=w)
        assert brute_gamma(petersen_adjacency(n, deleted_edges=w)) > ceil_3n_5(n)
        assert solve_bnb(g).gamma > ceil_3n_5(n)


def test_bondage_bounds_without_enough_removals():
    rep = bondage_number(10, 1)
    assert rep.bondage_exact is None and rep.bondage_bounds == (2, None)


def test_budget_gives_partial_report():
    rep = bondage_number(10, 3, budget=20)
    assert not rep.complete and rep.bondage_exact is None
    assert rep.bondage_bounds[0] >= 1
    mu = alteration_number(10, 2, budget=2)
    assert not mu.complete and mu.mu_exact is None


@pytest.mark.parametrize("n", range(5, 13))
def test_single_edge_invariance(n):
    assert single_edge_invariance(n)


def test_report_json():
    d = json.loads(alteration_number(6, 1).to_json())
    assert d["n"] == 6 and d["mu"]["exact"] == 1 and d["mu"]["witnesses"] == ["u0"]
    b = json.loads(bondage_number(5, 3).to_json())
    assert b["bondage"]["low"] == b["bondage"]["high"] == b["bondage"]["exact"] == 3
    assert all(len(w) == 3 and all("-" in e for e in w) for w in b["bondage"]["witnesses"])


def test_parallel_matches_serial():
    a = bondage_number(8, 3, jobs=2)
    b = bondage_number(8, 3)
    assert a.to_dict() == b.to_dict()


def test_preconditions():
    with pytest.raises(InvalidParameter):
        alteration_number(4, 1)
    with pytest.raises(InvalidParameter):
        bondage_number(8, 0)


def test_witness_vertices_are_vertices():
    rep = alteration_number(11, 1)
    assert rep.mu_witnesses == [[Vertex.outer(0)]]


@pytest.mark.parametrize("n", [5, 10])
def test_mu_is_three_for_multiples_of_five(n):
    rep = alteration_number(n, 3)
    assert rep.mu_exact == 3
    for w in rep.mu_witnesses:
        assert brute_gamma(petersen_adjacency(n, deleted=w)) != ceil_3n_5(n)
