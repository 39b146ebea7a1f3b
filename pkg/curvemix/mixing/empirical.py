"""Empirical endpoint histograms and one-step transition frequencies, compared against the exact chain."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/mixing/empirical.ipynb.

# %% ../../nbs/mixing/empirical.ipynb #c4e1a07b
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from fastcore.parallel import parallel
from scipy.stats import chisquare

from ..core.errors import MixingError
from ..core.matrix import BinaryMatrix
from ..samplers.chains import ChainSpec
from ..samplers.rng import RngStream
from ..samplers.runner import run_chain
from ..spectral.transitions import TransitionMatrix, build_transition
from ..statespace.enumeration import StateSpace, enumerate_states
from .evolution import distribution_at, tv_distance

# %% auto #0
__all__ = ['EmpiricalReport', 'TransitionFrequencies', 'empirical_distribution', 'transition_frequencies']

# %% ../../nbs/mixing/empirical.ipynb #1f9a6d30
logger = logging.getLogger(__name__)

@dataclass
class EmpiricalReport:
    """Endpoint histogram of independent runs against uniform and against the exact row of P^T."""

    chain: str  # chain descriptor
    steps: int  # T
    runs: int  # number of runs
    seed: int  # master seed
    counts: np.ndarray = field(repr=False)  # endpoint count per state index
    exact: np.ndarray = field(repr=False)  # row of P^T for the start state
    tv_uniform: float = 0.0  # TV between the histogram and uniform
    tv_exact: float = 0.0  # TV between the histogram and the exact row
    chi2: float = 0.0  # chi-square statistic against uniform
    p_value: float = 1.0  # its p-value
    max_z: float = 0.0  # largest |count - runs*exact| / sd over states

    @property
    def frequencies(self) -> np.ndarray: return self.counts / self.runs

    def to_dict(self) -> dict:
        return dict(chain=self.chain, steps=self.steps, runs=self.runs, seed=self.seed,
                    tv_uniform=self.tv_uniform, tv_exact=self.tv_exact, chi2=self.chi2, p_value=self.p_value,
                    max_z=self.max_z, counts=[int(c) for c in self.counts])

def _z_scores(
    counts: np.ndarray,  # observed counts
    total: int,  # trials
    p: np.ndarray  # success probabilities
) -> np.ndarray: # binomial z-scores, 0 where the variance vanishes and the count matches
    expected = total * p
    sd = np.sqrt(total * p * (1.0 - p))
    diff = counts - expected
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.where(sd > 0, np.abs(diff) / np.where(sd > 0, sd, 1.0), np.where(np.abs(diff) > 0.5, np.inf, 0.0))
    return z

def _endpoint(stream: RngStream, A0: BinaryMatrix, chain: ChainSpec, steps: int) -> bytes:
    return run_chain(A0, chain, steps, stream).final.key

# %% ../../nbs/mixing/empirical.ipynb #6e3d5a28
def empirical_distribution(
    chain: ChainSpec,  # chain to run
    A0: BinaryMatrix,  # start state of every run
    T: int,  # steps per run
    runs: int,  # independent runs
    seed: int,  # master seed; run w uses the w-th spawned stream
    space: Optional[StateSpace] = None,  # enumerated space, computed when None
    P: Optional[TransitionMatrix] = None,  # exact matrix of the chain, built when None
    n_workers: int = 0  # worker processes; 0 runs in this process
) -> EmpiricalReport: # histogram with TV and chi-square statistics
    """Run independent trajectories and compare their endpoints with the exact distribution.

    The histogram only depends on the seed: each run draws from its own spawned stream and the
    counts are aggregated in run order whatever the number of workers.
    """
    if runs < 1:
        raise MixingError(f"runs must be positive, got {runs}")
    space = enumerate_states(A0.parent_spec) if space is None else space
    P = build_transition(space, chain) if P is None else P
    streams = RngStream(seed).spawn(runs)
    keys = parallel(_endpoint, streams, A0=A0, chain=chain, steps=T, n_workers=n_workers,
                    progress=False)
    counts = np.zeros(space.N, dtype=np.int64)
    for key in keys:
        counts[space.index[key]] += 1
    exact = distribution_at(P, space.index_of(A0), T)
    freq = counts / runs
    stat = chisquare(counts) if space.N > 1 else None
    report = EmpiricalReport(chain.describe(), T, runs, seed, counts, exact,
                             tv_uniform=tv_distance(freq, space.uniform()), tv_exact=tv_distance(freq, exact),
                             chi2=float(stat.statistic) if stat else 0.0, p_value=float(stat.pvalue) if stat else 1.0,
                             max_z=float(_z_scores(counts, runs, exact).max()))
    logger.debug("%s T=%d runs=%d: tv_exact=%.4g chi2=%.4g", chain, T, runs, report.tv_exact, report.chi2)
    return report

# %% ../../nbs/mixing/empirical.ipynb #a85b2f19
@dataclass
class TransitionFrequencies:
    """Observed one-step transitions along a single long run."""

    chain: str  # chain descriptor
    steps: int  # number of observed transitions
    counts: np.ndarray = field(repr=False)  # N x N observed transition counts
    z: np.ndarray = field(repr=False)  # per-entry binomial z-score against the exact matrix

    @property
    def visits(self) -> np.ndarray: return self.counts.sum(axis=1)

    @property
    def max_z(self) -> float: return float(self.z.max(initial=0.0))

    def within(
        self,
        sigmas: float = 4.0  # tolerance in standard deviations
    ) -> bool:
        return self.max_z <= sigmas

def transition_frequencies(
    space: StateSpace,  # enumerated states
    chain: ChainSpec,  # chain to run
    steps: int,  # transitions to observe
    seed: int,  # run seed
    P: Optional[TransitionMatrix] = None,  # exact matrix, built when None
    start: int = 0  # start state index
) -> TransitionFrequencies: # counts and z-scores
    """Count x -> y moves along one run and score each entry against visits(x) * P(x, y)."""
    P = build_transition(space, chain) if P is None else P
    run = run_chain(space[start], chain, steps, seed, thin=1)
    path = np.fromiter((space.index[A.key] for A in run.trajectory), dtype=np.int64, count=len(run.trajectory))
    counts = np.zeros((space.N, space.N), dtype=np.int64)
    np.add.at(counts, (path[:-1], path[1:]), 1)
    M = P.to_float()
    visits = counts.sum(axis=1)
    z = np.vstack([_z_scores(counts[x], int(visits[x]), M[x]) for x in range(space.N)])
    freq = TransitionFrequencies(chain.describe(), steps, counts, z)
    logger.debug("%s: %d transitions, max z = %.3g", chain, steps, freq.max_z)
    return freq
