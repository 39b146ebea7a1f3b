from fractions import Fraction
from math import comb

import numpy as np
import pytest
import scipy.linalg

from curvemix.core.errors import (AssumptionViolated, BadPQ, CurvemixError, NegativeLazySpectrum, NoConvergence,
                                  NotRegular, NotSymmetric, StateSpaceTooLarge)
from curvemix.core.margins import make_instance, regular_instance
from curvemix.samplers.chains import CURVEBALL, EDGE, KTV, ChainKind, ChainSpec, parse_chain
from curvemix.samplers.rng import RngStream
from curvemix.spectral.comparison import (check_heatbath_condition, component_spectra, edge_delta,
                                          ktv_block_lower_bound, ktv_condition_cases, verify_edge_comparison,
                                          verify_k_curveball_bounds, verify_ktv_nonneg, verify_regular_bounds,
                                          verify_relaxation_comparison)
from curvemix.spectral.decomposition import (decompose_curveball_by_kappa, decompose_switch, switch_block_spectrum,
                                             tensor_block_matrix, tensor_block_spectrum)
from curvemix.spectral.eigen import eigendecompose_symmetric, psd_check, round_robin_schedule, spectral_report
from curvemix.spectral.johnson import johnson_adjacency, johnson_min_bound, johnson_spectrum
from curvemix.spectral.propositions import (dirichlet_equivalence_check, dirichlet_form, dirichlet_gap_check,
                                            eigen_difference_check, eigenvalue_dominance_check,
                                            lazy_relaxation_check, random_reversible_chain)
from curvemix.spectral.transitions import build_heat_bath, build_transition
from curvemix.statespace.enumeration import enumerate_states
from curvemix.statespace.graph import build_state_graph, check_johnson_isomorphism

F = Fraction


def _close(values, expected):
    return np.allclose(np.asarray(values, dtype=float), np.asarray(expected, dtype=float), atol=1e-10)


# eigensolver

def test_round_robin_covers_every_pair():
    for N in (2, 5, 8):
        pairs = [tuple(p) for rnd in round_robin_schedule(N) for p in rnd]
        assert sorted(pairs) == [(a, b) for a in range(N) for b in range(a + 1, N)]
        for rnd in round_robin_schedule(N):
            assert len(set(rnd.flatten())) == rnd.size


@pytest.mark.parametrize("N", [1, 2, 7, 30])
def test_jacobi_matches_lapack(N):
    g = RngStream(N).generator
    X = g.standard_normal((N, N))
    M = (X + X.T) / 2
    spectrum = eigendecompose_symmetric(M)
    assert _close(spectrum.eigenvalues, scipy.linalg.eigh(M, eigvals_only=True)[::-1])
    V = spectrum.eigenvectors
    assert np.allclose(V.T @ V, np.eye(N), atol=1e-9)


def test_jacobi_errors():
    with pytest.raises(NotSymmetric):
        eigendecompose_symmetric(np.array([[0.0, 1.0], [0.0, 0.0]]))
    X = RngStream(0).generator.standard_normal((12, 12))
    with pytest.raises(NoConvergence):
        eigendecompose_symmetric(X + X.T, max_sweeps=1)
    assert psd_check(np.eye(3)) and not psd_check(-np.eye(3))


# Johnson graphs

@pytest.mark.parametrize("p", [*range(1, 8), *(pytest.param(p, marks=pytest.mark.slow) for p in (8, 9, 10))])
def test_johnson_spectrum_matches_adjacency(p):
    for q in range(1, p + 1):
        A, labels = johnson_adjacency(p, q)
        assert len(labels) == comb(p, q)
        closed = johnson_spectrum(p, q)
        assert closed.size == comb(p, q)
        assert _close(np.sort(closed.as_array()), scipy.linalg.eigvalsh(A))
        # every shifted eigenvalue clears the uniform floor
        assert all(mu - q * (p - q) >= johnson_min_bound(p) for mu, _ in closed.pairs)


def test_johnson_errors():
    with pytest.raises(BadPQ):
        johnson_spectrum(3, 0)
    with pytest.raises(BadPQ):
        johnson_min_bound(0)
    assert johnson_spectrum(4, 2).pairs == ((4, 1), (0, 3), (-2, 2))


# exact transition matrices on the 3 x 3 permutation matrices

def test_ktv_matrix(perm3_space):
    P = build_transition(perm3_space, KTV)
    assert P.is_symmetric() and P.is_stochastic()
    assert set(P.entries.diagonal()) == {F(2, 3)}
    assert set(P.entries[0]) == {F(2, 3), F(1, 9), F(0)}
    spectrum = spectral_report(P)
    assert _close(spectrum.eigenvalues, [1, 2 / 3, 2 / 3, 2 / 3, 2 / 3, 1 / 3])
    assert spectrum.relaxation_1 == pytest.approx(3.0)


def test_curveball_matrix(perm3_space):
    P = build_transition(perm3_space, CURVEBALL)
    assert set(P.entries.diagonal()) == {F(1, 2)}
    spectrum = spectral_report(P)
    assert _close(spectrum.eigenvalues, [1, 0.5, 0.5, 0.5, 0.5, 0])
    assert spectrum.relaxation == pytest.approx(2.0)
    assert not spectrum.star_differs


def test_edge_matrix_is_periodic(perm3_space):
    P = build_transition(perm3_space, EDGE)
    assert set(P.entries.diagonal()) == {F(0)}
    spectrum = spectral_report(P)
    assert spectrum.is_periodic and spectrum.star_differs
    assert spectrum.relaxation == float("inf") and spectrum.relaxation_1 == pytest.approx(1.0)
    lazy = build_transition(perm3_space, parse_chain("edge-lazy:1/2"))
    assert lazy == P.lazy(F(1, 2))
    assert not spectral_report(lazy).is_periodic


def test_transition_matrix_guards(perm3_space, example37):
    with pytest.raises(StateSpaceTooLarge):
        build_transition(perm3_space, CURVEBALL, max_states=5)
    with pytest.raises(AssumptionViolated):
        build_transition(perm3_space, ChainSpec(ChainKind.GAMMA_SWITCH, gamma=F(1)))
    P = build_transition(perm3_space, CURVEBALL)
    assert P.first_difference(P) is None
    assert P.first_difference(build_transition(perm3_space, KTV))[:2] == (0, 0)
    single = enumerate_states(make_instance([2], [1, 0, 1]))
    assert build_transition(single, KTV).entries.tolist() == [[F(1)]]


def test_matrices_stay_exact(example37):
    space = enumerate_states(example37.parent_spec)
    for chain in (KTV, CURVEBALL, EDGE, parse_chain("gamma:1/21"), parse_chain("curveball@lazy:1/3")):
        P = build_transition(space, chain)
        assert P.check() is P
        assert all(isinstance(x, Fraction) for x in P.entries.flat)


def test_heat_bath_equals_curveball(perm3_space, example37, regular4_2_space):
    for space in (perm3_space, enumerate_states(example37.parent_spec), regular4_2_space):
        assert build_heat_bath(space) == build_transition(space, CURVEBALL)


def test_k_curveball_matrix(degenerate4):
    P = build_transition(degenerate4, parse_chain("kcurveball:2"))
    spectrum = spectral_report(P)
    assert _close(spectrum.eigenvalues, [1] + [2 / 3] * 5)
    assert spectral_report(build_transition(degenerate4, CURVEBALL)).relaxation_1 == pytest.approx(6.0)


# block decompositions

def test_switch_decomposition_is_exact(perm3_space, example37):
    decomposition = decompose_switch(perm3_space, F(1, 3))
    assert decomposition.exact and not decomposition.negative_blocks()
    assert decomposition.reconstruction == decomposition.target
    for block in decomposition.all_blocks():
        assert block.holding == F(2, 3)
        assert _close(eigendecompose_symmetric(block.to_float()).eigenvalues,
                      [float(x) for x in block.closed_form_spectrum()])
    space = enumerate_states(example37.parent_spec)
    # gamma = 1 pushes the (u, l) = (2, 2) blocks negative, the sum still matches
    loose = decompose_switch(space, F(1))
    assert loose.exact and loose.negative_blocks()
    assert all(b.holding < 0 for b in loose.negative_blocks())


def test_switch_block_spectrum():
    assert switch_block_spectrum(1, 1, F(1, 3)) == [F(1), F(1, 3)]
    assert switch_block_spectrum(0, 3, F(1, 3)) == [F(1)]
    assert switch_block_spectrum(2, 1, F(1, 3)) == [F(1), F(0), F(0)]


@pytest.mark.parametrize("sizes", [(6, 1), (2, 3), (3, 3, 2), (1, 1), (4,)])
def test_tensor_block_spectrum(sizes):
    closed = tensor_block_spectrum(sizes)
    assert len(closed) == np.prod(sizes)
    numeric = scipy.linalg.eigh(tensor_block_matrix(sizes), eigvals_only=True)[::-1]
    assert _close(numeric, [float(x) for x in closed])


def test_tensor_block_spectrum_errors():
    with pytest.raises(CurvemixError):
        tensor_block_spectrum([2, 0])
    with pytest.raises(CurvemixError):
        tensor_block_spectrum([2, 2], k=3)


def test_kappa_decomposition(degenerate4, regular4_2_space):
    for space in (degenerate4, regular4_2_space):
        P_c = build_transition(space, CURVEBALL)
        assert decompose_curveball_by_kappa(space, 2, P_c).exact


# comparison results

def test_ktv_condition_cases():
    cases = ktv_condition_cases(3, 1)
    assert [(a, b) for _, a, b in cases] == [(1, 1), (1, F(4, 3)), (-1, -3)]


def test_heatbath_condition_on_permutations(perm3_space):
    blocks = decompose_switch(perm3_space, F(1, 3)).all_blocks()
    s_spec = spectral_report(build_transition(perm3_space, KTV))
    c_spec = spectral_report(build_transition(perm3_space, CURVEBALL))
    expected = [F(1, 3), F(1, 9), F(1, 3)]
    for (_, alpha, beta), value in zip(ktv_condition_cases(3, 1), expected):
        report = check_heatbath_condition(blocks, alpha, beta, s_spec, c_spec)
        assert report.passed
        assert report.values["min_condition"] == pytest.approx(float(value))
    with pytest.raises(CurvemixError):
        check_heatbath_condition(blocks, 1, -1)
    failing = check_heatbath_condition(blocks, F(1), F(3), strict=False)
    assert not failing.passed and failing.values["min_condition"] == pytest.approx(-1.0)


def test_relaxation_comparison(perm3_space, regular4_2_space):
    report = verify_relaxation_comparison(perm3_space)
    assert report.passed
    (sandwich, *cases) = report.inequalities
    assert (sandwich.left, sandwich.middle, sandwich.right) == pytest.approx((1.0, 2.0, 2.25))
    # each condition case adds its condition and its conclusion
    assert len(cases) == 6
    assert verify_relaxation_comparison(regular4_2_space).passed
    with pytest.raises(AssumptionViolated):
        verify_relaxation_comparison(enumerate_states(make_instance([1, 1], [1, 1])))


def test_relaxation_comparison_single_state():
    space = enumerate_states(make_instance([3, 0], [1, 1, 1]))
    report = verify_relaxation_comparison(space)
    assert report.vacuous and report.passed


def test_ktv_nonnegative(perm3_space, regular4_2_space):
    assert ktv_block_lower_bound(3) == (F(0), F(-1, 3))
    assert ktv_block_lower_bound(5)[0] >= 0 and ktv_block_lower_bound(5)[1] >= 0
    report = verify_ktv_nonneg(perm3_space)
    assert report.values["min_eigenvalue"] == pytest.approx(1 / 3)
    assert verify_ktv_nonneg(regular4_2_space).passed


def test_edge_comparison(perm3_space):
    assert edge_delta(perm3_space) == F(2, 9)
    report = verify_edge_comparison(perm3_space)
    assert report.passed
    assert report.values["rel_lazy_edge"] == pytest.approx(4.5)
    assert report.values["min_lazy_diagonal"] == F(7, 9)
    assert any("lambda_min" in note for note in report.notes)


def test_regular_bounds(perm3_space, regular4_2_space):
    report = verify_regular_bounds(perm3_space)
    assert report.passed
    assert report.values["factor"] == F(9, 4)
    assert report.values["lambda_min_edge"] == pytest.approx(-1.0)
    report = verify_regular_bounds(regular4_2_space)
    assert report.passed and report.values["corollary_bound"] == F(16, 7)
    with pytest.raises(NotRegular):
        verify_regular_bounds(enumerate_states(make_instance([2, 1], [1, 1, 1])))


def test_k_curveball_bounds(degenerate4, regular4_2_space):
    report = verify_k_curveball_bounds(degenerate4, 2)
    assert report.passed
    assert report.values["rel_k_curveball"] == pytest.approx(3.0)
    assert report.values["lower_ratio"] == pytest.approx(1.0)
    assert report.values["upper_ratio"] == pytest.approx(0.5)
    assert verify_k_curveball_bounds(regular4_2_space, 2).passed


def test_reducible_components():
    space = enumerate_states(regular_instance(3, 1))
    P = build_transition(space, CURVEBALL)
    assert spectral_report(P).is_reducible
    components = build_state_graph(space, CURVEBALL).components()
    spectra = component_spectra(P, components)
    assert [s.N for s in spectra] == [1, 1]
    report = verify_k_curveball_bounds(space, 1, strict=False)
    assert report.reducible and not report.passed


# general spectral facts

@pytest.mark.parametrize("seed", [0, 1, 2])
def test_eigen_difference(seed):
    X, pi = random_reversible_chain(6, seed)
    assert np.allclose(X.sum(axis=1), 1.0)
    for alpha, beta in ((1.0, 1.0), (1.0, 2.0), (-1.0, -3.0)):
        assert eigen_difference_check(X, alpha, beta, pi).passed


@pytest.mark.parametrize("delta", [F(1, 4), F(1, 2), F(3, 4)])
def test_lazy_relaxation(perm3_space, delta):
    P_c = build_transition(perm3_space, CURVEBALL)
    report = lazy_relaxation_check(P_c, delta)
    assert report.passed
    assert report.values["lazy_lambda_1"] == pytest.approx(1 - float(delta) / 2)


def test_lazy_relaxation_of_periodic_chain(perm3_space):
    P_e = build_transition(perm3_space, EDGE)
    assert lazy_relaxation_check(P_e, F(1, 2)).passed
    with pytest.raises(NegativeLazySpectrum):
        lazy_relaxation_check(P_e, F(3, 4))


def test_dirichlet_comparison(perm3_space):
    P_c = build_transition(perm3_space, CURVEBALL)
    P_s = build_transition(perm3_space, KTV)
    forward = dirichlet_equivalence_check(P_c, P_s, 1.0)
    assert forward.passed and forward.values["psd"] and forward.values["random_holds"]
    backward = dirichlet_equivalence_check(P_s, P_c, 1.0)
    assert backward.passed and not backward.values["psd"] and backward.values["witness_violates"]
    assert backward.values["min_eigenvalue"] == pytest.approx(-1 / 3)
    # the parity function sees every move
    parity = np.array([1.0, -1.0, -1.0, 1.0, 1.0, -1.0])
    assert dirichlet_form(P_c, parity) == pytest.approx(1.0)
    assert dirichlet_form(P_s, parity) == pytest.approx(2 / 3)


def test_dirichlet_gap_and_dominance(perm3_space):
    P_c = build_transition(perm3_space, CURVEBALL)
    P_s = build_transition(perm3_space, KTV)
    gap = dirichlet_gap_check(P_c, P_s, 1.0)
    assert not gap.vacuous and gap.passed
    assert gap.inequalities[0].left == pytest.approx(1 / 3)
    assert gap.inequalities[0].right == pytest.approx(1 / 2)
    assert dirichlet_gap_check(P_s, P_c, 1.0).vacuous
    dominance = eigenvalue_dominance_check(P_s, P_c)
    assert dominance.passed and not dominance.vacuous
    assert eigenvalue_dominance_check(P_c, P_s).vacuous


# exhaustive sweeps over small instances

def _irreducible(space, chain):
    return space.N > 1 and not spectral_report(build_transition(space, chain)).is_reducible


@pytest.mark.slow
def test_identities_on_sweep(sweep_spaces):
    assert len(sweep_spaces) >= 50
    for space in sweep_spaces:
        decomposition = decompose_switch(space, KTV.gamma_for(space.spec), strict=False)
        assert decomposition.exact, space.spec.describe()
        for block in decomposition.all_blocks():
            check_johnson_isomorphism(block.hood, space)
            assert _close(eigendecompose_symmetric(block.to_float()).eigenvalues,
                          [float(x) for x in block.closed_form_spectrum()])
        assert build_heat_bath(space) == build_transition(space, CURVEBALL), space.spec.describe()


@pytest.mark.slow
def test_ktv_comparisons_on_sweep(sweep_spaces):
    checked = 0
    for space in sweep_spaces:
        if space.spec.n < 3:
            continue
        assert verify_ktv_nonneg(space, strict=False).passed, space.spec.describe()
        report = verify_relaxation_comparison(space, strict=False)
        assert report.passed or report.reducible, space.spec.describe()
        checked += not report.vacuous and not report.reducible
    assert checked >= 50


@pytest.mark.slow
def test_edge_comparison_on_sweep(sweep_spaces):
    for space in sweep_spaces:
        if space.spec.rho_total < 2:
            continue
        report = verify_edge_comparison(space, strict=False)
        assert report.passed or report.reducible, space.spec.describe()


@pytest.mark.slow
def test_k_curveball_bounds_on_sweep(sweep_spaces):
    for space in sweep_spaces:
        if space.spec.m != 4:
            continue
        report = verify_k_curveball_bounds(space, 2, strict=False)
        assert report.passed or report.reducible, space.spec.describe()


@pytest.mark.slow
@pytest.mark.parametrize("delta", [F(1, 4), F(1, 2), F(3, 4)])
def test_lazy_relaxation_on_sweep(sweep_spaces, delta):
    for space in sweep_spaces:
        if _irreducible(space, CURVEBALL):
            assert lazy_relaxation_check(build_transition(space, CURVEBALL), delta).passed


@pytest.mark.slow
@pytest.mark.parametrize("n,d", [(4, 1), (4, 2), (5, 1), (5, 2)])
def test_regular_bounds_on_directed_instances(n, d):
    space = enumerate_states(regular_instance(n, d))
    report = verify_regular_bounds(space, strict=False)
    assert report.passed or report.reducible
    if not report.reducible:
        assert report.values["lambda_min_edge"] >= float(report.values["eigenvalue_floor"]) - 1e-9
    lazy = verify_edge_comparison(space, strict=False)
    assert lazy.passed or lazy.reducible


@pytest.mark.parametrize("n", [4, 6])
def test_degenerate_k_curveball_family(n):
    # only rows 1 and 2 can trade, and they resample the whole space at once
    space = enumerate_states(make_instance([n // 2, n // 2, 0, 0], [1] * n))
    assert space.N == comb(n, n // 2)
    report = verify_k_curveball_bounds(space, 2)
    assert report.values["rel_curveball"] == pytest.approx(6.0)
    assert report.values["rel_k_curveball"] == pytest.approx(3.0)
    assert report.values["lower_ratio"] == pytest.approx(1.0)
    assert report.values["upper_ratio"] == pytest.approx(0.5)


# random reversible chains and random comparison triples

@pytest.mark.slow
def test_eigen_difference_on_random_chains():
    for seed in range(200):
        X, pi = random_reversible_chain(2 + seed % 7, seed)
        alpha, beta = ((1.0, 1.0), (1.0, 2.0), (-1.0, -3.0), (2.5, 0.5))[seed % 4]
        assert eigen_difference_check(X, alpha, beta, pi).passed


@pytest.mark.slow
def test_dirichlet_verdicts_on_random_triples(sweep_spaces):
    spaces = [s for s in sweep_spaces if s.N > 1 and s.spec.n >= 3 and s.spec.rho_total >= 2]
    chains = (CURVEBALL, KTV, parse_chain("edge-lazy:1/2"))
    g = RngStream(17).generator
    for trial in range(100):
        space = spaces[g.integers(len(spaces))]
        first, second = g.choice(len(chains), size=2, replace=False)
        P, Pt = (build_transition(space, chains[t]) for t in (first, second))
        alpha = float(g.uniform(-0.5, 3.0))
        report = dirichlet_equivalence_check(P, Pt, alpha, rng=trial)
        assert report.passed, (space.spec.describe(), alpha)


def test_negative_alpha_has_random_counterexample(perm3_space):
    P_c = build_transition(perm3_space, CURVEBALL)
    P_s = build_transition(perm3_space, KTV)
    report = dirichlet_equivalence_check(P_c, P_s, -1.0)
    assert not report.values["psd"]
    assert report.values["counterexample_trial"] is not None
    assert report.passed


def test_jacobi_subnormal_off_diagonal():
    M = np.array([[1.0, 1e-310, 0.0], [1e-310, 0.0, 0.5], [0.0, 0.5, 2.0]])
    with np.errstate(over="raise"):
        spectrum = eigendecompose_symmetric(M)
    assert _close(spectrum.eigenvalues, scipy.linalg.eigvalsh(M)[::-1])
