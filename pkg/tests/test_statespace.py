from fractions import Fraction
from math import comb, factorial

import pytest
from scipy.special import comb as sp_comb

from curvemix.core.errors import (CurvemixError, EmptyStateSpace, KTooLarge, NotIsomorphic, OverlappingPairs,
                                  StateSpaceTooLarge)
from curvemix.core.margins import make_instance, regular_instance
from curvemix.samplers.chains import CURVEBALL, EDGE, KTV, parse_chain
from curvemix.statespace.enumeration import (MAX_STATES_ENV, brute_force_states, enumerate_states,
                                             find_initial_state, iter_marginals, iter_states, max_states_from_env)
from curvemix.statespace.graph import (build_state_graph, check_irreducibility, check_johnson_isomorphism)
from curvemix.statespace.neighborhoods import (Neighborhood, all_rowpair_partitions, binomial_neighborhood,
                                               check_kappa, check_neighborhood_uniqueness, count_kappas,
                                               enumerate_kappas, kappa_partition, partition_by_rowpair)


# enumeration

def test_permutation_counts(perm3_space, derangement4):
    assert perm3_space.N == 6
    assert perm3_space.pi == Fraction(1, 6)
    assert enumerate_states(derangement4).N == 9
    assert enumerate_states(regular_instance(5, 1)).N == 44


def test_canonical_order(perm3_space):
    keys = [A.key for A in perm3_space]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert find_initial_state(perm3_space.spec) == perm3_space[0]
    assert all(perm3_space.index_of(A) == t for t, A in enumerate(perm3_space))
    assert perm3_space.row_array.shape == (6, 3)


@pytest.mark.slow
@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)])
def test_enumeration_matches_brute_force(m, n):
    for r, c in iter_marginals(m, n):
        spec = make_instance(r, c)
        assert tuple(iter_states(spec)) == brute_force_states(spec)


def test_enumeration_with_forbidden_matches_brute_force():
    for r, c in iter_marginals(3, 3, sorted_only=False):
        try:
            spec = make_instance(r, c, diagonal_forbidden=True)
        except CurvemixError:
            continue
        assert tuple(iter_states(spec)) == brute_force_states(spec)


def test_empty_and_too_large(perm3):
    empty = make_instance([2, 0], [2, 0])
    with pytest.raises(EmptyStateSpace):
        enumerate_states(empty)
    with pytest.raises(EmptyStateSpace):
        find_initial_state(empty)
    with pytest.raises(StateSpaceTooLarge):
        enumerate_states(perm3, cap=5)
    with pytest.raises(StateSpaceTooLarge):
        brute_force_states(make_instance([1] * 5, [1] * 5))


def test_max_states_from_env(monkeypatch):
    monkeypatch.delenv(MAX_STATES_ENV, raising=False)
    assert max_states_from_env(123) == 123
    monkeypatch.setenv(MAX_STATES_ENV, "7")
    assert max_states_from_env() == 7
    monkeypatch.setenv(MAX_STATES_ENV, "lots")
    with pytest.raises(CurvemixError):
        max_states_from_env()


def test_iter_marginals_totals():
    for r, c in iter_marginals(2, 3, sorted_only=False):
        assert sum(r) == sum(c) and len(r) == 2 and len(c) == 3


# neighborhoods

def test_binomial_neighborhood(example37):
    space = enumerate_states(example37.parent_spec)
    t = space.index_of(example37)
    hood = binomial_neighborhood(space, t, 0, 1)
    assert (hood.u, hood.l) == (2, 2)
    assert hood.size == comb(4, 2) == hood.expected_size
    assert t in hood.members
    assert hood in partition_by_rowpair(space, 0, 1)


def test_rowpair_partitions_cover_space(perm3_space):
    partitions = all_rowpair_partitions(perm3_space)
    assert list(partitions) == [(0, 1), (0, 2), (1, 2)]
    for classes in partitions.values():
        members = sorted(t for hood in classes for t in hood.members)
        assert members == list(range(perm3_space.N))
        assert all(hood.size == 2 for hood in classes)
    assert check_neighborhood_uniqueness(perm3_space) is None


def test_neighborhood_uniqueness_on_regular(regular4_2_space):
    assert check_neighborhood_uniqueness(regular4_2_space) is None


@pytest.mark.parametrize("m,k", [(4, 1), (4, 2), (5, 2), (6, 2), (6, 3), (7, 3)])
def test_count_kappas(m, k):
    kappas = list(enumerate_kappas(m, k))
    assert len(kappas) == count_kappas(m, k) == len(set(kappas))
    # choose the 2k rows, then a perfect matching on them
    assert count_kappas(m, k) == sp_comb(m, 2 * k, exact=True) * factorial(2 * k) // (2**k * factorial(k))


def test_kappa_validation():
    assert check_kappa(4, [(1, 0), (3, 2)]) == ((0, 1), (2, 3))
    with pytest.raises(OverlappingPairs):
        check_kappa(4, [(0, 1), (1, 2)])
    with pytest.raises(KTooLarge):
        list(enumerate_kappas(3, 2))
    assert count_kappas(3, 2) == 0


def test_kappa_partition_sizes(degenerate4):
    classes = kappa_partition(degenerate4, ((0, 1), (2, 3)))
    assert len(classes) == 1
    (hood,) = classes
    assert hood.profile == ((2, 2), (0, 0))
    assert hood.factor_sizes == (6, 1) and hood.size == 6
    assert isinstance(hood, Neighborhood)
    with pytest.raises(ValueError):
        hood.row_pair


# state graphs

def test_switch_graph_of_permutations(perm3_space):
    graph = build_state_graph(perm3_space, KTV)
    assert graph.degrees() == [3] * 6
    assert graph.is_bipartite()
    assert graph.adjacency().sum() == 18
    assert check_irreducibility(graph) == [list(range(6))]
    # every switch chain shares the edges
    assert set(build_state_graph(perm3_space, EDGE).graph.edges) == set(graph.graph.edges)


def test_curveball_graph_matches_switch_graph(perm3_space, example37):
    assert set(build_state_graph(perm3_space, CURVEBALL).graph.edges) == set(
        build_state_graph(perm3_space, KTV).graph.edges)
    space = enumerate_states(example37.parent_spec)
    assert len(check_irreducibility(build_state_graph(space, CURVEBALL))) == 1


def test_reducible_instance():
    space = enumerate_states(regular_instance(3, 1))
    assert space.N == 2
    components = build_state_graph(space, CURVEBALL).components()
    assert components == [[0], [1]]


def test_k_curveball_graph(degenerate4):
    graph = build_state_graph(degenerate4, parse_chain("kcurveball:2"))
    assert graph.degrees() == [5] * 6


def test_johnson_isomorphism(example37, perm3_space):
    space = enumerate_states(example37.parent_spec)
    for classes in all_rowpair_partitions(space).values():
        for hood in classes:
            check = check_johnson_isomorphism(hood, space)
            assert check.degree == hood.u * hood.l
            assert len(check.labels) == sp_comb(hood.u + hood.l, hood.u, exact=True)
    hood = partition_by_rowpair(perm3_space, 0, 1)[0]
    broken = Neighborhood(hood.pairs, hood.members[:1], hood.profile)
    with pytest.raises(NotIsomorphic):
        check_johnson_isomorphism(broken, perm3_space)


def test_single_row_graph_has_no_edges():
    space = enumerate_states(make_instance([2], [1, 1, 0]))
    assert space.N == 1
    for chain in (CURVEBALL, KTV, EDGE):
        assert build_state_graph(space, chain).graph.number_of_edges() == 0
    assert check_irreducibility(build_state_graph(space, CURVEBALL)) == [[0]]
