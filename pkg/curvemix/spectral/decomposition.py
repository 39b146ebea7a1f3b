"""Block decompositions of the switch and Curveball matrices over binomial and kappa-neighborhoods."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/decomposition.ipynb.

# %% ../../nbs/spectral/decomposition.ipynb #8a3e0f6d
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import comb, prod
from typing import Optional, Sequence

import numpy as np

from ..core.errors import ReconstructionMismatch, SpectralError
from ..core.moves import row_pair_stats, apply_switch
from ..statespace.enumeration import StateSpace
from ..statespace.neighborhoods import (Neighborhood, all_rowpair_partitions, enumerate_kappas, count_kappas,
                                        kappa_partition)
from .johnson import johnson_spectrum
from .transitions import TransitionMatrix, zero_entries, identity_entries, switch_entries

# %% auto #0
__all__ = ['SwitchBlock', 'SwitchDecomposition', 'switch_block', 'decompose_switch', 'switch_block_spectrum',
           'tensor_block_spectrum', 'tensor_block_matrix', 'kappa_block', 'KappaDecomposition',
           'decompose_curveball_by_kappa']

# %% ../../nbs/spectral/decomposition.ipynb #2f7c9b41
logger = logging.getLogger(__name__)

# %% ../../nbs/spectral/decomposition.ipynb #d5e08a17
@dataclass(frozen=True, eq=False)
class SwitchBlock:
    """The block (1 - u*l*gamma) I + gamma * M(H) of one binomial neighborhood."""

    hood: Neighborhood  # the class
    gamma: Fraction  # per-switch probability
    entries: np.ndarray  # |N| x |N| object array of Fraction, rows and columns in hood.members order
    adjacency: np.ndarray  # 0/1 switch adjacency inside the class

    @property
    def u(self) -> int: return self.hood.u

    @property
    def l(self) -> int: return self.hood.l

    @property
    def holding(self) -> Fraction: # common diagonal 1 - u*l*gamma
        return 1 - self.u * self.l * self.gamma

    @property
    def is_stochastic(self) -> bool: # False exactly when the diagonal is negative
        return self.holding >= 0

    def closed_form_spectrum(self) -> list[Fraction]: # 1 + (mu - u*l) gamma over the Johnson spectrum
        return switch_block_spectrum(self.u, self.l, self.gamma)

    def to_float(self) -> np.ndarray: return self.entries.astype(np.float64)

def switch_block(
    space: StateSpace,  # enumerated states
    hood: Neighborhood,  # a single-row-pair class
    gamma: Fraction  # per-switch probability
) -> SwitchBlock: # exact block of the class
    i, j = hood.row_pair
    gamma = Fraction(gamma)
    pos = {t: a for a, t in enumerate(hood.members)}
    adjacency = np.zeros((hood.size, hood.size), dtype=np.int64)
    for t in hood.members:
        A = space[t]
        stats = row_pair_stats(A, i, j)
        for k in stats.U:
            for l in stats.L:
                adjacency[pos[t], pos[space.index_of(apply_switch(A, i, j, k, l))]] = 1
    entries = identity_entries(hood.size) * (1 - hood.u * hood.l * gamma) + adjacency.astype(object) * gamma
    return SwitchBlock(hood, gamma, entries, adjacency)

# %% ../../nbs/spectral/decomposition.ipynb #71b4ce2a
@dataclass(frozen=True, eq=False)
class SwitchDecomposition:
    """All blocks of the gamma-switch matrix and the matrix they reconstruct."""

    gamma: Fraction
    blocks: dict[tuple[int, int], list[SwitchBlock]]  # row pair -> blocks, one per class
    reconstruction: TransitionMatrix  # sum over row pairs of C(m,2)^-1 times the embedded blocks
    target: TransitionMatrix  # gamma-switch matrix built directly
    mismatch: Optional[tuple[int, int, Fraction, Fraction]]  # first differing entry, None when exact

    @property
    def exact(self) -> bool: return self.mismatch is None

    def negative_blocks(self) -> list[SwitchBlock]: # blocks with a negative diagonal
        return [b for blocks in self.blocks.values() for b in blocks if not b.is_stochastic]

    def all_blocks(self) -> list[SwitchBlock]:
        return [b for blocks in self.blocks.values() for b in blocks]

def decompose_switch(
    space: StateSpace,  # enumerated states
    gamma: Fraction,  # per-switch probability; need not satisfy the holding assumption
    partitions: Optional[dict[tuple[int, int], list[Neighborhood]]] = None,  # precomputed row-pair classes
    strict: bool = True  # raise ReconstructionMismatch on a mismatch
) -> SwitchDecomposition: # blocks, reconstruction and verdict
    """Write the gamma-switch matrix as the average over row pairs of its neighborhood blocks.

    For the edge-switch gamma some blocks can have a negative diagonal; they are still summed and
    reported through negative_blocks.
    """
    gamma = Fraction(gamma)
    spec = space.spec
    if spec.m < 2:
        P = TransitionMatrix(space, identity_entries(space.N), None, f"gamma:{gamma}")
        return SwitchDecomposition(gamma, {}, P, P, None)
    partitions = all_rowpair_partitions(space) if partitions is None else partitions
    n_pairs = comb(spec.m, 2)
    blocks = {}
    entries = zero_entries(space.N)
    for pair, classes in partitions.items():
        blocks[pair] = [switch_block(space, hood, gamma) for hood in classes]
        for block in blocks[pair]:
            idx = np.asarray(block.hood.members)
            entries[np.ix_(idx, idx)] += block.entries / n_pairs
    label = f"gamma:{gamma}"
    reconstruction = TransitionMatrix(space, entries, None, f"{label} (blocks)")
    target = TransitionMatrix(space, switch_entries(space, gamma, check=False), None, label)
    mismatch = reconstruction.first_difference(target)
    decomposition = SwitchDecomposition(gamma, blocks, reconstruction, target, mismatch)
    negative = decomposition.negative_blocks()
    if negative:
        logger.warning("gamma = %s: %d blocks have a negative diagonal", gamma, len(negative))
    if mismatch is not None:
        a, b, x, y = mismatch
        logger.warning("Block reconstruction differs at (%d, %d): %s != %s", a, b, x, y)
        if strict:
            raise ReconstructionMismatch(f"Block sum differs from P_gamma at ({a}, {b}): {x} != {y}")
    return decomposition

# %% ../../nbs/spectral/decomposition.ipynb #e9c25d80
def switch_block_spectrum(
    u: int,  # ones of row i on the trade columns
    l: int,  # ones of row j on the trade columns
    gamma: Fraction  # per-switch probability
) -> list[Fraction]: # eigenvalues of the block, descending, with multiplicity
    """Closed-form block spectrum {1 + (mu - u*l) gamma} over the spectrum of J(u+l, u)."""
    gamma = Fraction(gamma)
    if u == 0 or l == 0:
        return [Fraction(1)]
    return [1 + (mu - u * l) * gamma for mu in johnson_spectrum(u + l, u).multiset()]

def tensor_block_spectrum(
    w_sizes: Sequence[int],  # |W_i| for each of the k pairs
    k: Optional[int] = None  # number of pairs, defaults to len(w_sizes)
) -> list[Fraction]: # eigenvalues of (1/k) sum_i I x .. x Q_i x .. x I, descending, with multiplicity
    """Each Q_i = J / |W_i| has spectrum {1, 0 x (|W_i| - 1)}; eigenvalues are (#ones chosen) / k."""
    k = len(w_sizes) if k is None else k
    if k != len(w_sizes) or k < 1 or any(w < 1 for w in w_sizes):
        raise SpectralError(f"Need k = {len(w_sizes)} positive factor sizes, got k = {k}, sizes {list(w_sizes)}")
    values = []
    for chosen in product((True, False), repeat=k):
        mult = prod(1 if one else w - 1 for one, w in zip(chosen, w_sizes))
        values.extend([Fraction(sum(chosen), k)] * mult)
    return sorted(values, reverse=True)

def tensor_block_matrix(
    w_sizes: Sequence[int]  # |W_i| for each pair
) -> np.ndarray: # the explicit averaged tensor-product block, float64
    k = len(w_sizes)
    factors = []
    for s, w in enumerate(w_sizes):
        mats = [np.full((v, v), 1.0 / v) if t == s else np.eye(v) for t, v in enumerate(w_sizes)]
        factors.append(reduce(np.kron, mats))
    return sum(factors) / k

# %% ../../nbs/spectral/decomposition.ipynb #4b1f6a93
def kappa_block(
    space: StateSpace,  # enumerated states
    hood: Neighborhood  # a kappa-neighborhood
) -> np.ndarray: # exact Curveball block: pick one of the k pairs uniformly, resample it uniformly
    """Curveball restricted to a kappa-class, in hood.members order."""
    k = len(hood.pairs)
    sizes = hood.factor_sizes
    rows = [space[t].rows for t in hood.members]
    outside = [frozenset(range(space.spec.m)) - set(pair) for pair in hood.pairs]
    block = zero_entries(hood.size)
    for a, b in product(range(hood.size), repeat=2):
        for s in range(k):
            if all(rows[a][x] == rows[b][x] for x in outside[s]):
                block[a, b] += Fraction(1, k * sizes[s])
    return block

@dataclass(frozen=True, eq=False)
class KappaDecomposition:
    """The Curveball matrix rewritten as an average over collections of k disjoint row pairs."""

    k: int
    blocks: dict[tuple[tuple[int, int], ...], list[tuple[Neighborhood, np.ndarray]]]  # kappa -> (class, block)
    reconstruction: TransitionMatrix
    mismatch: Optional[tuple[int, int, Fraction, Fraction]]  # against the Curveball matrix

    @property
    def exact(self) -> bool: return self.mismatch is None

def decompose_curveball_by_kappa(
    space: StateSpace,  # enumerated states
    k: int,  # pairs per collection, 2k <= m
    curveball: TransitionMatrix,  # the Curveball matrix to reconstruct
    strict: bool = True  # raise ReconstructionMismatch on a mismatch
) -> KappaDecomposition: # blocks and verdict
    """Choosing k disjoint pairs and then one of them uniformly is the Curveball pair choice."""
    n_kappas = count_kappas(space.spec.m, k)
    entries = zero_entries(space.N)
    blocks = {}
    for kappa in enumerate_kappas(space.spec.m, k):
        blocks[kappa] = []
        for hood in kappa_partition(space, kappa):
            block = kappa_block(space, hood)
            blocks[kappa].append((hood, block))
            idx = np.asarray(hood.members)
            entries[np.ix_(idx, idx)] += block / n_kappas
    reconstruction = TransitionMatrix(space, entries, None, f"curveball (kappa blocks, k={k})")
    mismatch = reconstruction.first_difference(curveball)
    if mismatch is not None and strict:
        a, b, x, y = mismatch
        raise ReconstructionMismatch(f"kappa-block sum differs from P_c at ({a}, {b}): {x} != {y}")
    return KappaDecomposition(k, blocks, reconstruction, mismatch)
