import pytest
from hypothesis import given, settings, strategies as st

from gpdom.analysis import classify, gammas, is_dominating, self_contained_blocks
from gpdom.construct import (construct, construct_fault_5k1, construct_fault_5k2,
                             construct_fault_free)
from gpdom.graph import FaultSpec, InvalidParameter, Vertex, build_graph
from gpdom.solver import ceil_3n_5, solve_dp


@pytest.mark.parametrize("n", range(3, 61))
def test_fault_free_construction_is_optimal(n):
    S = construct_fault_free(n)
    assert len(S) == ceil_3n_5(n) == solve_dp(n).gamma
    assert is_dominating(build_graph(n), S)


@pytest.mark.parametrize("k", range(1, 9))
def test_5k1_profile(k):
    n, f = 5 * k + 1, 0
    S = construct_fault_5k1(k, f)
    assert len(S) == 3 * k
    gam = gammas(S)
    twos = sorted(i for i, x in enumerate(gam) if x == 2)
    assert twos == sorted({(f - 2) % n, (f - 1) % n, (f + 1) % n})
    assert all(x == 3 for i, x in enumerate(gam) if i not in twos)
    assert sum(gam) == 3 * n - 3 == 15 * k
    assert classify(build_graph(n, 2, "u0"), S, FaultSpec.outer(0)) == "TypeII"


@pytest.mark.parametrize("k", range(1, 9))
def test_5k2_profile(k):
    n, f = 5 * k + 2, 0
    S = construct_fault_5k2(k, f)
    assert len(S) == 3 * k + 1
    assert Vertex.inner(f + 3) in S
    gam = gammas(S)
    assert sorted(i for i, x in enumerate(gam) if x == 2) == sorted({(f - 2) % n, (f - 1) % n})
    assert gam[(f + 3) % n] == 4
    # one more member than the 5k+1 core, so the block sum is 3n - 1
    assert sum(gam) == 5 * len(S) == 3 * n - 1


def test_6_2_example():
    S = construct_fault_5k1(1, 2)
    assert S.tokens() == ["u0", "v3", "v4"]
    assert is_dominating(build_graph(6, 2, "u2"), S)


def test_tiling_is_self_contained():
    S = construct_fault_5k1(4, 0)
    assert sorted(self_contained_blocks(None, S)) == sorted((-5 * x) % 21 for x in range(1, 4))


@settings(max_examples=40, deadline=None)
@given(n=st.integers(5, 80), f=st.integers(0, 200))
def test_construct_dispatch_matches_solver(n, f):
    fault = FaultSpec.outer(f % n)
    S = construct(n, fault)
    assert fault.faulted not in S
    assert is_dominating(build_graph(n, 2, fault), S)
    assert len(S) == solve_dp(n, fault).gamma


def test_invalid_arguments():
    with pytest.raises(InvalidParameter):
        construct_fault_5k1(0)
    with pytest.raises(InvalidParameter):
        construct_fault_5k2(-1)
    with pytest.raises(InvalidParameter):
        construct_fault_free(2)
    with pytest.raises(InvalidParameter):
        construct(10, FaultSpec(Vertex.inner(0)))
