"""Exact-rational transition matrices of every chain, plus the heat-bath construction."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/transitions.ipynb.

# %% ../../nbs/spectral/transitions.ipynb #4e1c7b90
from __future__ import annotations
import csv
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence, TextIO

import numpy as np

from ..core.errors import AssumptionViolated, NotSymmetric, SpectralError, StateSpaceTooLarge
from ..core.moves import row_pair_stats, apply_switch, trade_neighbors
from ..samplers.chains import ChainKind, ChainSpec
from ..statespace.enumeration import StateSpace
from ..statespace.neighborhoods import (Neighborhood, all_rowpair_partitions, enumerate_kappas, count_kappas,
                                        kappa_partition)

# %% auto #0
__all__ = ['MAX_DENSE_STATES', 'K_CURVEBALL_MAX_ROWS', 'TransitionMatrix', 'zero_entries', 'identity_entries',
           'switch_entries', 'build_transition', 'build_heat_bath']

# %% ../../nbs/spectral/transitions.ipynb #b9d02e4f
logger = logging.getLogger(__name__)

MAX_DENSE_STATES = 2_000  # largest state space given an exact dense matrix
K_CURVEBALL_MAX_ROWS = 8  # k-Curveball matrices sum over every collection of row pairs

# %% ../../nbs/spectral/transitions.ipynb #07a3f5c1
def zero_entries(
    N: int  # size
) -> np.ndarray: # N x N object array of Fraction(0)
    return np.full((N, N), Fraction(0), dtype=object)

def identity_entries(
    N: int  # size
) -> np.ndarray: # exact identity
    entries = zero_entries(N)
    for t in range(N):
        entries[t, t] = Fraction(1)
    return entries

# %% ../../nbs/spectral/transitions.ipynb #e2a6c81d
@dataclass
class TransitionMatrix:
    """An exact transition matrix on an enumerated state space."""

    space: StateSpace  # states indexing rows and columns
    entries: np.ndarray  # N x N object array of Fraction
    chain: Optional[ChainSpec] = None  # chain the matrix realizes, None for derived matrices
    label: str = ""  # name used in reports

    def __post_init__(self):
        if self.entries.shape != (self.space.N, self.space.N):
            raise SpectralError(f"Entries have shape {self.entries.shape}, space has {self.space.N} states")
        if not self.label:
            self.label = str(self.chain) if self.chain is not None else "P"

    @property
    def N(self) -> int: return self.space.N

    def __getitem__(self, idx): return self.entries[idx]

    def lazy(
        self,
        delta: Fraction  # probability of moving according to self
    ) -> TransitionMatrix: # (1 - delta) I + delta P
        delta = Fraction(delta)
        if not 0 < delta <= 1:
            raise SpectralError(f"Laziness must lie in (0, 1], got {delta}")
        entries = self.entries * delta + identity_entries(self.N) * (1 - delta)
        chain = self.chain.lazy(delta) if self.chain is not None and delta < 1 else self.chain
        return TransitionMatrix(self.space, entries, chain, f"{self.label}@lazy:{delta}")

    def to_float(self) -> np.ndarray: # float64 copy for the eigensolver
        return self.entries.astype(np.float64)

    def to_csv(
        self,
        stream: TextIO  # writable text stream
    ):
        """Write the matrix as CSV of exact "p/q" strings, one row per state."""
        writer = csv.writer(stream, lineterminator="\n")
        for row in self.entries:
            writer.writerow(f"{x.numerator}/{x.denominator}" for x in row)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))

    def is_stochastic(self) -> bool: # entries non-negative, every row sums to exactly 1
        if any(x < 0 for x in self.entries.flat):
            return False
        return all(s == 1 for s in self.entries.sum(axis=1))

    def check(self) -> TransitionMatrix: # self, for chaining
        """Raise unless the matrix is symmetric and stochastic in exact arithmetic."""
        if not self.is_symmetric():
            a, b = np.argwhere(self.entries != self.entries.T)[0]
            raise NotSymmetric(f"{self.label}: P[{a},{b}] = {self.entries[a, b]} but P[{b},{a}] = {self.entries[b, a]}")
        if not self.is_stochastic():
            raise SpectralError(f"{self.label} is not a stochastic matrix")
        return self

    def restrict(
        self,
        indices: Sequence[int]  # state indices of a closed class
    ) -> TransitionMatrix: # the matrix on those states only
        idx = sorted(indices)
        space = StateSpace.from_states(self.space.spec, tuple(self.space[t] for t in idx))
        return TransitionMatrix(space, self.entries[np.ix_(idx, idx)].copy(), self.chain, self.label)

    def first_difference(
        self,
        other: TransitionMatrix  # matrix on the same space
    ) -> Optional[tuple[int, int, Fraction, Fraction]]: # (a, b, self[a,b], other[a,b]) or None if equal
        diff = np.argwhere(self.entries != other.entries)
        if len(diff) == 0:
            return None
        a, b = (int(x) for x in diff[0])
        return a, b, self.entries[a, b], other.entries[a, b]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.space.states == other.space.states and bool(np.array_equal(self.entries, other.entries))

# %% ../../nbs/spectral/transitions.ipynb #5a8f9e32
def _check_size(space: StateSpace, limit: Optional[int]):
    limit = MAX_DENSE_STATES if limit is None else limit
    if space.N > limit:
        raise StateSpaceTooLarge(f"{space.N} states exceed the dense-matrix limit {limit}")

def _add_block(entries: np.ndarray, members: Sequence[int], weight: Fraction):
    idx = np.asarray(members)
    entries[np.ix_(idx, idx)] += weight

def switch_entries(
    space: StateSpace,  # enumerated states, m >= 2
    gamma: Fraction,  # per-switch probability
    check: bool = True  # raise AssumptionViolated when some u*l*gamma >= 1
) -> np.ndarray: # exact entries of the gamma-switch matrix
    """Entries gamma / C(m, 2) on switch-adjacent pairs, holding probability on the diagonal.

    With check=False the diagonal may go negative, which the edge-switch decomposition reports.
    """
    spec = space.spec
    gamma = Fraction(gamma)
    per_switch = gamma / comb(spec.m, 2)
    entries = zero_entries(space.N)
    for t, A in enumerate(space.states):
        for i, j in combinations(range(spec.m), 2):
            stats = row_pair_stats(A, i, j)
            if check and stats.u * stats.l * gamma >= 1:
                raise AssumptionViolated(
                    f"u*l*gamma = {stats.u * stats.l * gamma} >= 1 on rows {i + 1},{j + 1} of state {t}")
            for k in stats.U:
                for l in stats.L:
                    entries[t, space.index_of(apply_switch(A, i, j, k, l))] += per_switch
        entries[t, t] = 1 - sum(entries[t])
    return entries

def _curveball_entries(space: StateSpace) -> np.ndarray:
    m = space.spec.m
    entries = zero_entries(space.N)
    for t, A in enumerate(space.states):
        for i, j in combinations(range(m), 2):
            members = trade_neighbors(A, i, j)
            w = Fraction(1, comb(m, 2) * len(members))
            for B in members:
                entries[t, space.index_of(B)] += w
    return entries

def _k_curveball_entries(space: StateSpace, k: int) -> np.ndarray:
    m = space.spec.m
    if m > K_CURVEBALL_MAX_ROWS:
        raise StateSpaceTooLarge(f"Exact k-Curveball matrices need m <= {K_CURVEBALL_MAX_ROWS}, got {m}")
    n_kappas = count_kappas(m, k)
    entries = zero_entries(space.N)
    for kappa in enumerate_kappas(m, k):
        for hood in kappa_partition(space, kappa):
            _add_block(entries, hood.members, Fraction(1, n_kappas * hood.size))
    return entries

def build_transition(
    space: StateSpace,  # enumerated states
    chain: ChainSpec,  # chain to build
    max_states: Optional[int] = None  # dense-size limit, MAX_DENSE_STATES when None
) -> TransitionMatrix: # exact transition matrix
    """Exact transition matrix of a chain.

    Switch chains put gamma / C(m, 2) on every switch-adjacent pair; the edge-switch chain uses
    gamma = C(m, 2) / C(rho, 2) and may leave zero holding probability. The Curveball matrix is
    assembled per state from the trade enumeration of every row pair, the k-Curveball matrix from
    the classes of every collection of k disjoint row pairs.
    """
    _check_size(space, max_states)
    spec = space.spec
    chain.check_for(spec)
    if space.N == 1 or spec.m < 2:
        entries = identity_entries(space.N)
    elif chain.is_switch:
        entries = switch_entries(space, chain.gamma_for(spec), check=chain.kind is not ChainKind.EDGE_SWITCH)
    elif chain.kind is ChainKind.CURVEBALL:
        entries = _curveball_entries(space)
    else:
        entries = _k_curveball_entries(space, chain.k)
    P = TransitionMatrix(space, entries, chain.base())
    if chain.laziness is not None:
        P = P.lazy(chain.laziness)
        P.label = str(chain)
    logger.debug("Built %s on %d states", chain, space.N)
    return P

def build_heat_bath(
    space: StateSpace,  # enumerated states
    partitions: Optional[dict[tuple[int, int], list[Neighborhood]]] = None,  # row pair -> classes
    max_states: Optional[int] = None  # dense-size limit
) -> TransitionMatrix: # average over row pairs of the uniform resampling within each class
    """Heat-bath chain of the row-pair partitions: pick a row pair, resample uniformly in the class."""
    _check_size(space, max_states)
    m = space.spec.m
    if m < 2:
        return TransitionMatrix(space, identity_entries(space.N), None, "heat-bath")
    partitions = all_rowpair_partitions(space) if partitions is None else partitions
    entries = zero_entries(space.N)
    n_pairs = comb(m, 2)
    for classes in partitions.values():
        for hood in classes:
            _add_block(entries, hood.members, Fraction(1, n_pairs * hood.size))
    return TransitionMatrix(space, entries, None, "heat-bath")
