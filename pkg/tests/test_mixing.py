import io
import math
from fractions import Fraction

import numpy as np
import pytest

from curvemix.core.errors import (BoundViolated, HorizonExceeded, IndexOutOfRange, LengthMismatch, MixingError,
                                  PeriodicChain, Reducible)
from curvemix.core.margins import regular_instance
from curvemix.samplers.chains import CURVEBALL, EDGE, KTV, parse_chain
from curvemix.spectral.eigen import spectral_report
from curvemix.spectral.transitions import build_transition
from curvemix.statespace.enumeration import enumerate_states
from curvemix.mixing.bounds import MixingReport, check_mixing_bounds, default_horizon, mixing_time
from curvemix.mixing.empirical import empirical_distribution, transition_frequencies
from curvemix.mixing.evolution import (distribution_at, exact_distribution_at, tv_distance, worst_case_tv,
                                       worst_case_tv_curve)

F = Fraction


@pytest.fixture
def curveball3(perm3_space):
    return build_transition(perm3_space, CURVEBALL)


# distributions

def test_tv_distance():
    assert tv_distance([1, 0], [0, 1]) == 1.0
    assert tv_distance([0.5, 0.5], [0.5, 0.5]) == 0.0
    assert tv_distance([0.25, 0.75], [0.5, 0.5]) == pytest.approx(0.25)
    with pytest.raises(LengthMismatch):
        tv_distance([1.0], [0.5, 0.5])


def test_distribution_at(curveball3):
    exact = exact_distribution_at(curveball3, 0, 3)
    assert exact == [F(1, 4), F(1, 6), F(1, 6), F(1, 8), F(1, 8), F(1, 6)]
    assert np.allclose(distribution_at(curveball3, 0, 3), [float(x) for x in exact])
    assert distribution_at(curveball3, 2, 0).tolist() == [0, 0, 1, 0, 0, 0]
    with pytest.raises(IndexOutOfRange):
        distribution_at(curveball3, 6, 1)
    with pytest.raises(MixingError):
        exact_distribution_at(curveball3, 0, -1)


def test_worst_case_curve(curveball3):
    curve = worst_case_tv_curve(curveball3, 8)
    assert curve[0] == pytest.approx(5 / 6)
    assert np.allclose(curve[1:], [2 / 3 * 0.5**t for t in range(1, 9)])
    assert worst_case_tv(np.full((3, 3), 1 / 3)) == pytest.approx(0.0)


def test_curve_of_a_rotation():
    rotation = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    assert np.allclose(worst_case_tv_curve(rotation, 3), 2 / 3)
    assert worst_case_tv_curve(np.full((2, 2), 0.5), 3).tolist() == [0.5, 0.0, 0.0, 0.0]


# mixing times

@pytest.mark.parametrize("epsilon,tau", [(0.25, 2), (0.05, 4), (0.01, 7), (0.9, 0), (1.0, 0)])
def test_mixing_time_of_permutations(curveball3, epsilon, tau):
    report = mixing_time(curveball3, epsilon)
    assert report.tau == tau
    assert report.lambda_star == pytest.approx(0.5)
    assert len(report.curve) == tau + 1


def test_mixing_bounds(curveball3):
    report = check_mixing_bounds(curveball3, 0.25)
    assert report.passed
    assert report.lower_bound == pytest.approx(0.5 * math.log(2))
    assert report.upper_bound == pytest.approx(2 * math.log(24))
    assert report.horizon == default_horizon(spectral_report(curveball3), 6) == 70
    d = report.to_dict(curve=True)
    assert d["tau"] == 2 and d["curve"][0] == pytest.approx(5 / 6)
    out = io.StringIO()
    report.to_csv(out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "t,d" and len(lines) == 4 and lines[1].startswith("0,")


def test_mixing_report_flags_violations():
    report = MixingReport(0.25, 100, 0.5, 6, np.zeros(101))
    assert report.lower_holds and not report.upper_holds and not report.passed
    report = MixingReport(1e-9, 0, 0.99, 6, np.zeros(1))
    assert not report.lower_holds


@pytest.mark.parametrize("chain", [KTV, parse_chain("edge-lazy:1/2"), parse_chain("gamma:1/6")])
def test_mixing_bounds_other_chains(perm3_space, chain):
    P = build_transition(perm3_space, chain)
    for epsilon in (0.25, 0.05, 0.01):
        assert check_mixing_bounds(P, epsilon).passed


def test_mixing_time_errors(perm3_space, curveball3):
    with pytest.raises(MixingError):
        mixing_time(curveball3, 0.0)
    with pytest.raises(PeriodicChain):
        mixing_time(build_transition(perm3_space, EDGE), 0.25)
    with pytest.raises(HorizonExceeded):
        mixing_time(curveball3, 0.01, horizon=3)
    space = enumerate_states(regular_instance(3, 1))
    with pytest.raises(Reducible):
        mixing_time(build_transition(space, CURVEBALL), 0.25)
    with pytest.raises(MixingError):
        default_horizon(spectral_report(build_transition(perm3_space, EDGE)), 6)


def test_check_mixing_bounds_strict(curveball3, monkeypatch):
    monkeypatch.setattr(MixingReport, "upper_bound", property(lambda self: 0.5))
    report = check_mixing_bounds(curveball3, 0.25, strict=False)
    assert not report.passed
    with pytest.raises(BoundViolated):
        check_mixing_bounds(curveball3, 0.25)


# sampling against the exact matrices

def test_empirical_distribution(perm3_space, curveball3):
    A0 = perm3_space[0]
    report = empirical_distribution(CURVEBALL, A0, 10, 10_000, seed=3, space=perm3_space, P=curveball3)
    assert report.counts.sum() == 10_000
    assert report.tv_exact <= 0.03
    assert report.max_z <= 4.5
    assert report.p_value > 1e-3
    again = empirical_distribution(CURVEBALL, A0, 10, 10_000, seed=3, space=perm3_space, P=curveball3)
    assert np.array_equal(report.counts, again.counts)
    assert report.to_dict()["counts"] == [int(c) for c in report.counts]


def test_empirical_distribution_short_runs(perm3_space):
    # after one KTV step the start state keeps 2/3 of the mass
    report = empirical_distribution(KTV, perm3_space[0], 1, 6_000, seed=8, space=perm3_space)
    assert report.exact[0] == pytest.approx(2 / 3)
    assert report.max_z <= 4.5
    with pytest.raises(MixingError):
        empirical_distribution(KTV, perm3_space[0], 1, 0, seed=8, space=perm3_space)


@pytest.mark.parametrize("chain", ["curveball", "ktv", "edge", "edge-lazy:1/2", "gamma:1/3", "curveball@lazy:1/2"])
def test_transition_frequencies(perm3_space, chain):
    freq = transition_frequencies(perm3_space, parse_chain(chain), 12_000, seed=21)
    assert freq.counts.sum() == 12_000
    assert freq.within(4.5)
    P = build_transition(perm3_space, parse_chain(chain)).to_float()
    # no transition outside the support of P
    assert not np.any(freq.counts[P == 0])


def test_k_curveball_transition_frequencies(degenerate4):
    freq = transition_frequencies(degenerate4, parse_chain("kcurveball:2"), 12_000, seed=5)
    assert freq.within(4.5)
    # the big class is resampled a third of the time
    holds = np.trace(freq.counts) / freq.counts.sum()
    assert abs(holds - (2 / 3 + 1 / 18)) < 4.5 * math.sqrt(0.72 * 0.28 / 12_000)


# sampler fidelity at full scale

SAMPLERS = {
    "perm3_space": ("gamma:1/6", "ktv", "curveball", "kcurveball:1", "edge"),
    "regular4_2_space": ("gamma:1/12", "ktv", "curveball", "kcurveball:2", "edge"),
}
FIDELITY_CASES = [(instance, chain) for instance, chains in SAMPLERS.items() for chain in chains]


@pytest.mark.slow
@pytest.mark.parametrize("instance,chain", FIDELITY_CASES)
def test_one_step_frequencies_full(request, instance, chain):
    space = request.getfixturevalue(instance)
    freq = transition_frequencies(space, parse_chain(chain), 100_000, seed=31)
    assert freq.counts.sum() == 100_000
    assert freq.within(4.0)
    P = build_transition(space, parse_chain(chain)).to_float()
    assert not np.any(freq.counts[P == 0])


@pytest.mark.slow
@pytest.mark.parametrize("instance,chain", FIDELITY_CASES)
def test_endpoint_histogram_full(request, instance, chain):
    space = request.getfixturevalue(instance)
    # the bare edge-switch chain can be periodic
    chain = parse_chain("edge-lazy:1/2" if chain == "edge" else chain)
    P = build_transition(space, chain)
    T = 2 * mixing_time(P, 0.01).tau
    report = empirical_distribution(chain, space[0], T, 60_000, seed=13, space=space, P=P)
    assert report.counts.sum() == 60_000
    assert report.tv_exact <= 0.02


@pytest.mark.slow
def test_mixing_bounds_on_sweep(sweep_spaces):
    checked = 0
    for space in sweep_spaces:
        spec = space.spec
        chains = [CURVEBALL] + ([KTV] if spec.n >= 3 else [])
        if spec.rho_total >= 2:
            chains.append(parse_chain("edge-lazy:1/2"))
        for chain in chains:
            P = build_transition(space, chain)
            if space.N == 1 or spectral_report(P).is_reducible:
                continue
            for epsilon in (0.25, 0.05, 0.01):
                assert check_mixing_bounds(P, epsilon, strict=False).passed, (spec.describe(), str(chain), epsilon)
            checked += 1
    assert checked >= 50
