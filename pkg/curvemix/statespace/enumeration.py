"""Exhaustive enumeration of the state space of an instance."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/statespace/enumeration.ipynb.

# %% ../../nbs/statespace/enumeration.ipynb #c2b71e4d
from __future__ import annotations
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Optional

import numpy as np

from ..core.errors import CurvemixError, EmptyStateSpace, StateSpaceTooLarge, SpecMismatch
from ..core.margins import MarginSpec, column_bit
from ..core.matrix import BinaryMatrix

# %% auto #0
__all__ = ['DEFAULT_MAX_STATES', 'MAX_STATES_ENV', 'BRUTE_FORCE_MAX_ENTRIES', 'StateSpace', 'max_states_from_env',
           'iter_states', 'find_initial_state', 'enumerate_states', 'brute_force_states', 'iter_marginals']

# %% ../../nbs/statespace/enumeration.ipynb #1f8a3c50
logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 200_000  # enumeration cap unless overridden
MAX_STATES_ENV = "CURVEMIX_MAX_STATES"  # environment variable overriding the cap
BRUTE_FORCE_MAX_ENTRIES = 20  # m*n limit of the filter-everything oracle

# %% ../../nbs/statespace/enumeration.ipynb #8d9e04b7
@dataclass(frozen=True)
class StateSpace:
    """All states of an instance in canonical order, with the inverse index."""

    spec: MarginSpec  # instance
    states: tuple[BinaryMatrix, ...]  # strictly increasing by canonical key
    index: dict[bytes, int] = field(repr=False, compare=False)  # canonical key -> position

    @classmethod
    def from_states(
        cls,
        spec: MarginSpec,  # instance
        states: tuple[BinaryMatrix, ...]  # states in canonical order
    ) -> StateSpace:
        return cls(spec, tuple(states), {A.key: t for t, A in enumerate(states)})

    @property
    def N(self) -> int: # number of states
        return len(self.states)

    @property
    def pi(self) -> Fraction: # uniform stationary probability of each state
        return Fraction(1, self.N)

    def __len__(self) -> int:
        return self.N

    def __iter__(self) -> Iterator[BinaryMatrix]:
        return iter(self.states)

    def __getitem__(self, t: int) -> BinaryMatrix:
        return self.states[t]

    def index_of(
        self,
        A: BinaryMatrix  # a state of this space
    ) -> int: # its position
        if A.parent_spec != self.spec:
            raise SpecMismatch("Matrix belongs to a different instance")
        return self.index[A.key]

    @cached_property
    def row_array(self) -> np.ndarray: # (N, m) array of row bit vectors
        return np.array([A.rows for A in self.states], dtype=np.int64).reshape(self.N, self.spec.m)

    def uniform(self) -> np.ndarray: # uniform distribution as a float vector
        return np.full(self.N, 1.0 / self.N)

# %% ../../nbs/statespace/enumeration.ipynb #4b06f7a2
def max_states_from_env(
    default: int = DEFAULT_MAX_STATES  # cap when the variable is unset
) -> int: # enumeration cap
    """Read the enumeration cap from CURVEMIX_MAX_STATES."""
    raw = os.environ.get(MAX_STATES_ENV)
    if raw is None or not raw.strip():
        return default
    try:
        cap = int(raw)
    except ValueError:
        raise CurvemixError(f"{MAX_STATES_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise CurvemixError(f"{MAX_STATES_ENV} must be positive, got {cap}")
    return cap

# %% ../../nbs/statespace/enumeration.ipynb #e7a91d35
def _row_candidates(
    spec: MarginSpec  # instance
) -> list[list[int]]: # per row, every allowed row mask with r_i ones, ascending
    candidates = []
    for i, ri in enumerate(spec.r):
        allowed = [j for j in range(spec.n) if not spec.is_forbidden(i, j)]
        masks = [sum(column_bit(spec.n, j) for j in cols) for cols in combinations(allowed, ri)]
        candidates.append(sorted(masks))
    return candidates

def iter_states(
    spec: MarginSpec  # validated instance
) -> Iterator[BinaryMatrix]: # states in canonical order
    """Row-by-row backtracking with column-sum feasibility pruning.

    After placing row i, every column must still be completable by the rows below it
    that allow that column.
    """
    m, n = spec.m, spec.n
    candidates = _row_candidates(spec)
    # rows_left[i][j]: rows strictly below i that may hold a one in column j
    rows_left = [[sum(1 for x in range(i + 1, m) if not spec.is_forbidden(x, j)) for j in range(n)]
                 for i in range(m)]
    bits = [column_bit(n, j) for j in range(n)]
    need = list(spec.c)
    rows: list[int] = []

    def place(i: int) -> Iterator[BinaryMatrix]:
        if i == m:
            yield BinaryMatrix(tuple(rows), spec)
            return
        below = rows_left[i]
        for mask in candidates[i]:
            ok = True
            for j in range(n):
                left = need[j] - (1 if mask & bits[j] else 0)
                if left < 0 or left > below[j]:
                    ok = False
                    break
            if not ok:
                continue
            for j in range(n):
                if mask & bits[j]:
                    need[j] -= 1
            rows.append(mask)
            yield from place(i + 1)
            rows.pop()
            for j in range(n):
                if mask & bits[j]:
                    need[j] += 1

    yield from place(0)

def find_initial_state(
    spec: MarginSpec  # validated instance
) -> BinaryMatrix: # smallest state in canonical order
    """First state without enumerating the rest."""
    for A in iter_states(spec):
        return A
    raise EmptyStateSpace(f"No binary matrix satisfies {spec.describe()}")

def enumerate_states(
    spec: MarginSpec,  # validated instance
    cap: Optional[int] = None  # maximum number of states (None reads CURVEMIX_MAX_STATES)
) -> StateSpace: # the full state space
    """Enumerate every state, refusing to return a partial space."""
    cap = max_states_from_env() if cap is None else cap
    states = []
    for A in iter_states(spec):
        states.append(A)
        if len(states) > cap:
            raise StateSpaceTooLarge(f"{spec.describe()} has more than {cap} states")
    if not states:
        raise EmptyStateSpace(f"No binary matrix satisfies {spec.describe()}")
    logger.debug("Enumerated %d states for %s", len(states), spec.describe())
    return StateSpace.from_states(spec, tuple(states))

# %% ../../nbs/statespace/enumeration.ipynb #50cd8f1b
def brute_force_states(
    spec: MarginSpec  # instance with m*n <= 20
) -> tuple[BinaryMatrix, ...]: # every matching matrix, canonical order
    """Filter all 2^(m*n) binary matrices; the independent oracle for iter_states."""
    m, n = spec.m, spec.n
    if m * n > BRUTE_FORCE_MAX_ENTRIES:
        raise StateSpaceTooLarge(f"Brute force needs m*n <= {BRUTE_FORCE_MAX_ENTRIES}, got {m * n}")
    # with row 0 in the top bits, numeric order of x equals canonical order
    x = np.arange(1 << (m * n), dtype=np.int64)
    row_mask = (1 << n) - 1
    popcount = np.array([bin(v).count("1") for v in range(1 << n)], dtype=np.int64)
    for i in range(m):
        row = (x >> (n * (m - 1 - i))) & row_mask
        x = x[(popcount[row] == spec.r[i]) & ((row & spec.forbidden_masks[i]) == 0)]
    rows = np.stack([(x >> (n * (m - 1 - i))) & row_mask for i in range(m)], axis=1).reshape(len(x), m)
    for j in range(n):
        col = ((rows >> (n - 1 - j)) & 1).sum(axis=1)
        rows = rows[col == spec.c[j]]
    return tuple(BinaryMatrix(tuple(int(v) for v in r), spec) for r in rows)

# %% ../../nbs/statespace/enumeration.ipynb #9f3e6ad4
def iter_marginals(
    m: int,  # rows
    n: int,  # columns
    sorted_only: bool = True  # only non-increasing r and c
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]: # (r, c) with equal totals
    """Marginal vectors for exhaustive sweeps.

    Without forbidden entries, permuting rows or columns permutes the state space, so the
    non-increasing vectors cover every spectrum.
    """
    if sorted_only:
        rs = (tuple(sorted(v, reverse=True)) for v in combinations_with_replacement(range(n + 1), m))
        cs = [tuple(sorted(v, reverse=True)) for v in combinations_with_replacement(range(m + 1), n)]
    else:
        rs = product(range(n + 1), repeat=m)
        cs = list(product(range(m + 1), repeat=n))
    for r in rs:
        for c in cs:
            if sum(r) == sum(c):
                yield r, c
