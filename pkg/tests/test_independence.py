import pytest
from hypothesis import given, settings

from indpoly.dsl import build
from indpoly.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    make_graph,
    path_graph,
    star_graph,
    zykov_sum,
)
from indpoly.independence import (
    InstanceTooLarge,
    clique_number,
    independence_polynomial,
    independence_polynomial_bruteforce,
    maximal_stable_sets,
    omega_by_size,
    omega_profile,
    stability_number,
    stable_sets,
)
from indpoly.polyseq import seq_mul, seq_zykov

from .conftest import brute_alpha, brute_clique, brute_maximal_stable, brute_omega_by_size, graphs


@pytest.mark.parametrize(
    "G,coeffs",
    [
        (empty_graph(0), (1,)),
        (complete_graph(1), (1, 1)),
        (empty_graph(3), (1, 3, 3, 1)),
        (complete_graph(5), (1, 5)),
        (path_graph(4), (1, 4, 3)),
        (cycle_graph(5), (1, 5, 5)),
        (cycle_graph(7), (1, 7, 14, 7)),
        (star_graph(complete_graph(3)), (1, 6, 9, 4)),
    ],
)
def test_small_polynomials(G, coeffs):
    assert independence_polynomial(G) == coeffs
    assert independence_polynomial_bruteforce(G) == coeffs


def test_large_instances():
    G = build("(K24 + E6) | (K25 + E6)")
    assert independence_polynomial(G, max_n=None) == (1, 61, 960, 955, 1475, 1527, 1218, 841, 495, 220, 66, 12, 1)
    with pytest.raises(InstanceTooLarge):
        independence_polynomial(build("K41"))
    assert independence_polynomial(build("K41"), max_n=None) == (1, 41)
    with pytest.raises(InstanceTooLarge):
        independence_polynomial_bruteforce(build("E26"))


def test_maximal_stable_sets_examples():
    assert sorted(map(sorted, maximal_stable_sets(make_graph(4, [(0, 1), (0, 2), (0, 3)])))) == [[0], [1, 2, 3]]
    C8 = cycle_graph(8)
    assert {len(S) for S in maximal_stable_sets(C8)} == {3, 4}
    assert list(maximal_stable_sets(empty_graph(0))) == [frozenset()]


def test_omega_profile_values():
    # computed by the brute-force oracle in conftest, then pinned
    K3s = star_graph(complete_graph(3))
    assert brute_omega_by_size(K3s) == [6, 4, 2, 0]
    p = omega_profile(K3s)
    assert (p.alpha, p.omegas, p.clique_number) == (3, (0, 2, 4, 6), 3)
    assert p.at_size(2) == 2
    C7 = omega_profile(cycle_graph(7))
    assert brute_omega_by_size(cycle_graph(7)) == [7, 4, 2, 0]
    assert C7.omegas == (0, 2, 4, 7) and C7.clique_number == 2


def test_stability_and_clique():
    assert stability_number(cycle_graph(7)) == 3 and clique_number(cycle_graph(7)) == 2
    G = build("deledge(K4, 0, 1)")
    assert (stability_number(G), clique_number(G)) == (2, 3)
    assert stability_number(empty_graph(0)) == 0


@settings(max_examples=300)
@given(graphs(max_n=10))
def test_recursion_matches_bruteforce(G):
    assert independence_polynomial(G) == independence_polynomial_bruteforce(G)


@given(graphs(max_n=6), graphs(max_n=6))
def test_disjoint_union_multiplies(G1, G2):
    assert independence_polynomial(disjoint_union(G1, G2)) == seq_mul(
        independence_polynomial(G1), independence_polynomial(G2)
    )


@given(graphs(max_n=6), graphs(max_n=6))
def test_zykov_sum_identity(G1, G2):
    assert independence_polynomial(zykov_sum(G1, G2)) == seq_zykov(
        independence_polynomial(G1), independence_polynomial(G2)
    )


@given(graphs(max_n=8))
def test_stable_set_enumeration(G):
    counts = [0] * (G.n + 1)
    for S, closed in stable_sets(G):
        counts[S.bit_count()] += 1
        assert closed & S == S
    assert tuple(c for c in counts if c) == tuple(independence_polynomial(G))


@given(graphs(max_n=8))
def test_maximal_sets_match_bruteforce(G):
    found = list(maximal_stable_sets(G))
    assert len(found) == len(set(found))
    assert set(found) == brute_maximal_stable(G)
    assert max(len(S) for S in found) == independence_polynomial(G).degree


@given(graphs(max_n=8))
def test_alpha_and_clique_match_bruteforce(G):
    assert stability_number(G) == brute_alpha(G)
    assert clique_number(G) == brute_clique(G)


@settings(max_examples=200)
@given(graphs(min_n=1, max_n=9))
def test_omega_profile_matches_bruteforce(G):
    prof = omega_profile(G)
    assert omega_by_size(G) == brute_omega_by_size(G)
    assert prof.omegas[prof.alpha] == G.n and prof.omegas[0] == 0
    assert prof.omegas[1] <= prof.clique_number


@given(graphs(min_n=1, max_n=9))
def test_profile_bound_on_coefficients(G):
    s = independence_polynomial(G)
    prof = omega_profile(G)
    for k in range(prof.alpha):
        assert (k + 1) * s[k + 1] <= prof.omegas[prof.alpha - k] * s[k]
