"""Binomial neighborhoods: partitions of the state space by row pair or by collection of disjoint row pairs."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/statespace/neighborhoods.ipynb.

# %% ../../nbs/statespace/neighborhoods.ipynb #7c3d9a15
from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Optional, Sequence

from networkx.utils import UnionFind

from ..core.errors import IndexOutOfRange, OverlappingPairs, KTooLarge, StateSpaceError
from ..core.moves import row_pair_stats, apply_switch, trade_neighbors
from .enumeration import StateSpace

# %% auto #0
__all__ = ['RowPairs', 'Neighborhood', 'binomial_neighborhood', 'check_kappa', 'kappa_partition',
           'partition_by_rowpair', 'all_rowpair_partitions', 'enumerate_kappas', 'count_kappas',
           'check_neighborhood_uniqueness']

# %% ../../nbs/statespace/neighborhoods.ipynb #d41e86b2
logger = logging.getLogger(__name__)

RowPairs = tuple[tuple[int, int], ...]  # disjoint 0-based row pairs (i, j), i < j

# %% ../../nbs/statespace/neighborhoods.ipynb #2ab5f0c9
@dataclass(frozen=True)
class Neighborhood:
    """One class of states reachable from each other by trades on fixed row pairs."""

    pairs: RowPairs  # the row pair, or the collection kappa of disjoint pairs
    members: tuple[int, ...]  # sorted state indices
    profile: tuple[tuple[int, int], ...]  # (u, l) for each pair, shared by every member

    @property
    def row_pair(self) -> tuple[int, int]: # the single row pair (k = 1 neighborhoods)
        if len(self.pairs) != 1:
            raise ValueError("Neighborhood spans several row pairs")
        return self.pairs[0]

    @property
    def u(self) -> int: return self.profile[0][0]

    @property
    def l(self) -> int: return self.profile[0][1]

    @property
    def size(self) -> int: return len(self.members)

    @property
    def factor_sizes(self) -> tuple[int, ...]: # C(u_i + l_i, u_i) per pair
        return tuple(comb(u + l, u) for u, l in self.profile)

    @property
    def expected_size(self) -> int: # product of the binomial factors
        return prod(self.factor_sizes)

# %% ../../nbs/statespace/neighborhoods.ipynb #f6b39e07
def binomial_neighborhood(
    space: StateSpace,  # enumerated states
    t: int,  # index of the state A
    i: int,  # first row (0-based)
    j: int  # second row, j > i
) -> Neighborhood: # every state obtained from A by a trade on rows i, j
    """Binomial neighborhood of one state."""
    A = space[t]
    stats = row_pair_stats(A, i, j)
    members = tuple(sorted(space.index_of(B) for B in trade_neighbors(A, i, j)))
    return Neighborhood(((i, j),), members, ((stats.u, stats.l),))

# %% ../../nbs/statespace/neighborhoods.ipynb #0e7c84da
def check_kappa(
    m: int,  # number of rows
    kappa: Sequence[tuple[int, int]]  # row pairs
) -> RowPairs: # normalised pairs, each ordered, sorted
    """Validate a collection of row pairs."""
    pairs = tuple(sorted(tuple(sorted(p)) for p in kappa))
    for i, j in pairs:
        if not (0 <= i < j < m):
            raise IndexOutOfRange(f"Row pair ({i + 1}, {j + 1}) invalid for {m} rows")
    rows = [x for p in pairs for x in p]
    if len(rows) != len(set(rows)):
        raise OverlappingPairs(f"Row pairs {[(i + 1, j + 1) for i, j in pairs]} share a row")
    return pairs

def kappa_partition(
    space: StateSpace,  # enumerated states
    kappa: Sequence[tuple[int, int]]  # pairwise disjoint row pairs
) -> list[Neighborhood]: # classes sorted by smallest member
    """Partition the states into kappa-neighborhoods by union-find over single switches."""
    pairs = check_kappa(space.spec.m, kappa)
    classes = UnionFind(range(space.N))
    for t, A in enumerate(space.states):
        for i, j in pairs:
            stats = row_pair_stats(A, i, j)
            for k in stats.U:
                for l in stats.L:
                    classes.union(t, space.index_of(apply_switch(A, i, j, k, l)))
    result = []
    for group in classes.to_sets():
        members = tuple(sorted(group))
        A = space[members[0]]
        profile = tuple((s.u, s.l) for s in (row_pair_stats(A, i, j) for i, j in pairs))
        hood = Neighborhood(pairs, members, profile)
        if hood.size != hood.expected_size:
            raise StateSpaceError(
                f"Class of state {members[0]} under {pairs} has {hood.size} members, expected {hood.expected_size}")
        result.append(hood)
    result.sort(key=lambda h: h.members[0])
    logger.debug("kappa %s: %d classes over %d states", pairs, len(result), space.N)
    return result

def partition_by_rowpair(
    space: StateSpace,  # enumerated states
    i: int,  # first row (0-based)
    j: int  # second row, j > i
) -> list[Neighborhood]: # the equivalence classes of trades on rows i, j
    """Binomial neighborhoods of one row pair."""
    return kappa_partition(space, ((i, j),))

def all_rowpair_partitions(
    space: StateSpace  # enumerated states
) -> dict[tuple[int, int], list[Neighborhood]]: # (i, j) -> classes, i < j
    """Partitions for every row pair, in row-pair order."""
    return {(i, j): partition_by_rowpair(space, i, j) for i, j in combinations(range(space.spec.m), 2)}

# %% ../../nbs/statespace/neighborhoods.ipynb #b8c2e45a
def enumerate_kappas(
    m: int,  # number of rows
    k: int  # pairs per collection
) -> Iterator[RowPairs]: # every collection of k pairwise disjoint row pairs, lexicographic
    """Enumerate the index set of the k-Curveball chain."""
    if 2 * k > m:
        raise KTooLarge(f"{k} disjoint row pairs need {2 * k} rows, only {m} available")

    def matchings(rows: tuple[int, ...]) -> Iterator[RowPairs]:
        if not rows:
            yield ()
            return
        a, rest = rows[0], rows[1:]
        for t, b in enumerate(rest):
            for tail in matchings(rest[:t] + rest[t + 1:]):
                yield ((a, b),) + tail

    found = sorted(match for chosen in combinations(range(m), 2 * k) for match in matchings(chosen))
    yield from found

def count_kappas(
    m: int,  # number of rows
    k: int  # pairs per collection
) -> int: # m! / ((m - 2k)! 2^k k!)
    if 2 * k > m:
        return 0
    return factorial(m) // (factorial(m - 2 * k) * 2**k * factorial(k))

# %% ../../nbs/statespace/neighborhoods.ipynb #63a1d7f0
def check_neighborhood_uniqueness(
    space: StateSpace,  # enumerated states
    partitions: Optional[dict[tuple[int, int], list[Neighborhood]]] = None  # precomputed row-pair partitions
) -> Optional[tuple[int, int]]: # a pair of states sharing two neighborhoods, or None
    """Check that two distinct states share at most one binomial neighborhood across all row pairs."""
    partitions = all_rowpair_partitions(space) if partitions is None else partitions
    shared: Counter[tuple[int, int]] = Counter()
    for classes in partitions.values():
        for hood in classes:
            for a, b in combinations(hood.members, 2):
                shared[(a, b)] += 1
                if shared[(a, b)] > 1:
                    logger.warning("States %d and %d share more than one neighborhood", a, b)
                    return a, b
    return None
