"""Single steps of the switch, edge-switch, Curveball and k-Curveball chains."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/samplers/steps.ipynb.

# %% ../../nbs/samplers/steps.ipynb #0c6f93d2
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Optional

from ..core.errors import AssumptionViolated, BadDelta, ChainError, KTooLarge
from ..core.margins import MarginSpec, column_bit
from ..core.matrix import BinaryMatrix
from ..core.moves import row_pair_stats, apply_switch, trade_by_mask, columns_mask
from .rng import RngStream

# %% auto #0
__all__ = ['StepFn', 'AssumptionCheck', 'step_gamma_switch', 'step_ktv_classic', 'check_gamma_assumption',
           'step_curveball', 'sample_disjoint_pairs', 'step_k_curveball', 'EdgeSwitcher', 'step_edge_switch',
           'step_lazy']

# %% ../../nbs/samplers/steps.ipynb #7a2e5b18
logger = logging.getLogger(__name__)

StepFn = Callable[[BinaryMatrix, RngStream], BinaryMatrix]

# %% ../../nbs/samplers/steps.ipynb #d83f0e6a
def step_gamma_switch(
    A: BinaryMatrix,  # current state
    gamma: Fraction,  # probability of each individual switch on the drawn row pair
    rng: RngStream  # random stream
) -> BinaryMatrix: # next state
    """One step of the gamma-switch chain."""
    if A.m < 2:
        return A
    i, j = rng.pair(A.m)
    stats = row_pair_stats(A, i, j)
    p_move = stats.u * stats.l * Fraction(gamma)
    if p_move >= 1:
        raise AssumptionViolated(
            f"u*l*gamma = {p_move} >= 1 on rows {i + 1},{j + 1}; choose a smaller gamma")
    if p_move == 0 or not rng.bernoulli(p_move):
        return A
    k = stats.U[rng.below(stats.u)]
    l = stats.L[rng.below(stats.l)]
    return apply_switch(A, i, j, k, l)

# %% ../../nbs/samplers/steps.ipynb #6b19c4ae
def step_ktv_classic(
    A: BinaryMatrix,  # current state
    rng: RngStream  # random stream
) -> BinaryMatrix: # next state
    """Classical KTV step: draw two rows and two columns, switch if they form an allowed checkerboard."""
    if A.m < 2 or A.n < 2:
        return A
    i, j = rng.pair(A.m)
    k, l = rng.pair(A.n)
    spec = A.parent_spec
    block = (A.entry(i, k), A.entry(i, l), A.entry(j, k), A.entry(j, l))
    if block not in ((1, 0, 0, 1), (0, 1, 1, 0)):
        return A
    if any(spec.is_forbidden(x, y) for x in (i, j) for y in (k, l)):
        return A
    return apply_switch(A, i, j, k, l)

# %% ../../nbs/samplers/steps.ipynb #f4a8cb21
@dataclass(frozen=True)
class AssumptionCheck:
    """Outcome of testing u*l*gamma < 1 over an instance."""

    gamma: Fraction  # gamma that was tested
    mode: str  # "exact" or "bound"
    max_ul: int  # largest u*l found (exact) or allowed by the bound
    holds: bool  # max_ul * gamma < 1
    witness_pair: Optional[tuple[int, int]] = None  # 0-based rows attaining max_ul
    witness_state: Optional[BinaryMatrix] = None  # state attaining max_ul (exact mode only)

def check_gamma_assumption(
    spec: MarginSpec,  # instance
    gamma: Fraction,  # candidate gamma
    mode: Literal["exact", "bound"] = "bound",  # scan every state, or use u+l <= min(n, r_i+r_j)
    max_states: Optional[int] = None,  # enumeration cap for exact mode
    strict: bool = False  # raise AssumptionViolated instead of returning a failing verdict
) -> AssumptionCheck: # verdict with witness
    """Check that every state and row pair keeps the holding probability of the gamma-switch chain positive.

    Bound mode is sufficient only: it can fail for a gamma that exact mode accepts.
    """
    gamma = Fraction(gamma)
    best, pair, state = 0, None, None
    if mode == "bound":
        for i in range(spec.m):
            for j in range(i + 1, spec.m):
                s = min(spec.n, spec.r[i] + spec.r[j])
                if pair is None or s * s // 4 > best:
                    best, pair = s * s // 4, (i, j)
    elif mode == "exact":
        from ..statespace.enumeration import enumerate_states
        space = enumerate_states(spec, max_states)
        for A in space.states:
            for i in range(spec.m):
                for j in range(i + 1, spec.m):
                    stats = row_pair_stats(A, i, j)
                    if pair is None or stats.u * stats.l > best:
                        best, pair, state = stats.u * stats.l, (i, j), A
    else:
        raise ChainError(f"Unknown mode {mode!r}")
    verdict = AssumptionCheck(gamma, mode, best, best * gamma < 1, pair, state)
    logger.debug("gamma assumption (%s): max u*l = %d, gamma = %s, holds = %s", mode, best, gamma, verdict.holds)
    if strict and not verdict.holds:
        where = f" on rows {pair[0] + 1},{pair[1] + 1}" if pair else ""
        raise AssumptionViolated(f"max u*l = {best}{where} gives u*l*gamma = {best * gamma} >= 1")
    return verdict

# %% ../../nbs/samplers/steps.ipynb #29dbe705
def step_curveball(
    A: BinaryMatrix,  # current state
    rng: RngStream  # random stream
) -> BinaryMatrix: # next state
    """One Curveball step: a uniform binomial trade on a uniform row pair."""
    if A.m < 2:
        return A
    i, j = rng.pair(A.m)
    return _random_trade(A, i, j, rng)

def _random_trade(
    A: BinaryMatrix,  # current state
    i: int,  # first row
    j: int,  # second row
    rng: RngStream  # random stream
) -> BinaryMatrix: # A after a uniform trade on rows i, j
    stats = row_pair_stats(A, i, j)
    if stats.u == 0 or stats.l == 0:
        return A
    keep = rng.sample(stats.trade_columns, stats.u)
    return trade_by_mask(A, stats, columns_mask(keep, A.n))

# %% ../../nbs/samplers/steps.ipynb #b57e12c0
def sample_disjoint_pairs(
    m: int,  # number of rows
    k: int,  # number of pairs
    rng: RngStream  # random stream
) -> tuple[tuple[int, int], ...]: # k disjoint row pairs, each (a, b) with a < b, sorted
    """Uniform draw from the collections of k pairwise disjoint row pairs.

    Picks 2k rows by a partial shuffle, then matches the lowest unmatched row with a uniform
    partner until every chosen row is matched.
    """
    if k < 0:
        raise ChainError(f"k must be non-negative, got {k}")
    if 2 * k > m:
        raise KTooLarge(f"{k} disjoint row pairs need {2 * k} rows, only {m} available")
    rows = sorted(rng.sample(range(m), 2 * k))
    pairs = []
    while rows:
        a = rows.pop(0)
        b = rows.pop(rng.below(len(rows)))
        pairs.append((a, b))
    return tuple(sorted(pairs))

def step_k_curveball(
    A: BinaryMatrix,  # current state
    k: int,  # number of disjoint row pairs traded at once
    rng: RngStream  # random stream
) -> BinaryMatrix: # next state
    """One k-Curveball step: independent uniform trades on k uniform disjoint row pairs."""
    for i, j in sample_disjoint_pairs(A.m, k, rng):
        A = _random_trade(A, i, j, rng)
    return A

# %% ../../nbs/samplers/steps.ipynb #e0c95a47
class EdgeSwitcher:
    """Stateful edge-switch stepper keeping the list of one-positions up to date in O(1) per move."""

    def __init__(
        self,
        A: BinaryMatrix  # starting state
    ):
        self.spec = A.parent_spec
        self.rows = list(A.rows)
        self.ones = [(i, j) for i in range(A.m) for j in range(A.n) if A.entry(i, j)]

    @property
    def matrix(self) -> BinaryMatrix: # current state
        return BinaryMatrix(tuple(self.rows), self.spec)

    def _has(self, i: int, j: int) -> bool:
        return (self.rows[i] >> (self.spec.n - 1 - j)) & 1 == 1

    def step(
        self,
        rng: RngStream  # random stream
    ) -> bool: # True if a switch was performed
        """Draw two distinct ones; switch if they span an allowed checkerboard."""
        if len(self.ones) < 2:
            return False
        s, t = rng.pair(len(self.ones))
        (i, a), (j, b) = self.ones[s], self.ones[t]
        if i == j or a == b or self._has(i, b) or self._has(j, a):
            return False
        if self.spec.is_forbidden(i, b) or self.spec.is_forbidden(j, a):
            return False
        n = self.spec.n
        self.rows[i] ^= column_bit(n, a) | column_bit(n, b)
        self.rows[j] ^= column_bit(n, a) | column_bit(n, b)
        self.ones[s], self.ones[t] = (i, b), (j, a)
        return True

def step_edge_switch(
    A: BinaryMatrix,  # current state
    rng: RngStream  # random stream
) -> BinaryMatrix: # next state
    """One edge-switch step."""
    switcher = EdgeSwitcher(A)
    return switcher.matrix if switcher.step(rng) else A

# %% ../../nbs/samplers/steps.ipynb #3e7d0b94
def step_lazy(
    A: BinaryMatrix,  # current state
    inner_step: StepFn,  # step of the chain being made lazy
    delta: Fraction,  # probability of delegating to inner_step
    rng: RngStream  # random stream
) -> BinaryMatrix: # next state
    """One step of the delta-lazy chain (1 - delta) I + delta P."""
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise BadDelta(f"delta must lie in (0, 1), got {delta}")
    return inner_step(A, rng) if rng.bernoulli(delta) else A
