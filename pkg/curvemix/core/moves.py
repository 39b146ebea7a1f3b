"""Row-pair statistics and the two elementary moves: the switch and the binomial trade."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/moves.ipynb.

# %% ../../nbs/core/moves.ipynb #6e2a90b4
from __future__ import annotations
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import IndexOutOfRange, MoveError, NotACheckerboard, ForbiddenEntryTouched, BadTradeSet
from .margins import column_bit
from .matrix import BinaryMatrix

# %% auto #0
__all__ = ['RowPairStats', 'mask_columns', 'columns_mask', 'row_pair_stats', 'is_switch_adjacent', 'apply_switch',
           'apply_trade', 'trade_by_mask', 'trade_neighbors']

# %% ../../nbs/core/moves.ipynb #c1f8d502
def mask_columns(
    mask: int,  # row bit mask
    n: int  # row width
) -> tuple[int, ...]: # 0-based columns set in the mask, ascending
    return tuple(j for j in range(n) if (mask >> (n - 1 - j)) & 1)

def columns_mask(
    columns: Iterable[int],  # 0-based columns
    n: int  # row width
) -> int: # mask with those columns set
    mask = 0
    for j in columns:
        mask |= column_bit(n, j)
    return mask

# %% ../../nbs/core/moves.ipynb #0b97e3f1
@dataclass(frozen=True)
class RowPairStats:
    """Columns where a pair of rows can exchange their ones."""

    i: int  # first row (0-based, i < j)
    j: int  # second row
    U: tuple[int, ...]  # columns with A(i,k)=1, A(j,k)=0 and (j,k) allowed
    L: tuple[int, ...]  # columns with A(i,k)=0, A(j,k)=1 and (i,k) allowed
    u_mask: int  # U as a row mask
    l_mask: int  # L as a row mask

    @property
    def u(self) -> int: return len(self.U)

    @property
    def l(self) -> int: return len(self.L)

    @property
    def trade_mask(self) -> int: return self.u_mask | self.l_mask

    @property
    def trade_columns(self) -> tuple[int, ...]: # U and L merged, ascending
        return tuple(sorted(self.U + self.L))

# %% ../../nbs/core/moves.ipynb #97d04c5e
def _check_rows(
    A: BinaryMatrix,  # matrix the rows belong to
    i: int,  # first row
    j: int  # second row
) -> None:
    if not (0 <= i < j < A.m):
        raise IndexOutOfRange(f"Need 1 <= i < j <= {A.m}, got i={i + 1}, j={j + 1}")

def row_pair_stats(
    A: BinaryMatrix,  # current state
    i: int,  # first row (0-based)
    j: int  # second row, j > i
) -> RowPairStats: # U, L and their sizes for rows i and j
    """Compute the trade columns of a row pair with word-level bit operations."""
    _check_rows(A, i, j)
    spec = A.parent_spec
    ri, rj = A.rows[i], A.rows[j]
    fi, fj = spec.forbidden_masks[i], spec.forbidden_masks[j]
    u_mask = ri & ~rj & ~fj & spec.full_mask
    l_mask = rj & ~ri & ~fi & spec.full_mask
    return RowPairStats(i, j, mask_columns(u_mask, A.n), mask_columns(l_mask, A.n), u_mask, l_mask)

# %% ../../nbs/core/moves.ipynb #4a7be8c9
def _moved(
    A: BinaryMatrix,  # state before the move
    i: int,  # first changed row
    j: int,  # second changed row
    new_i: int,  # new bits of row i
    new_j: int  # new bits of row j
) -> BinaryMatrix: # state after the move
    """Replace two rows after checking that margins and forbidden zeros survive."""
    spec = A.parent_spec
    old_i, old_j = A.rows[i], A.rows[j]
    # column sums on rows i, j are preserved iff both the union and the overlap are
    if (new_i | new_j) != (old_i | old_j) or (new_i & new_j) != (old_i & old_j):
        raise MoveError(f"Move on rows {i + 1},{j + 1} changes column sums")
    if new_i.bit_count() != spec.r[i] or new_j.bit_count() != spec.r[j]:
        raise MoveError(f"Move on rows {i + 1},{j + 1} changes row sums")
    if new_i & spec.forbidden_masks[i] or new_j & spec.forbidden_masks[j]:
        raise ForbiddenEntryTouched(f"Move on rows {i + 1},{j + 1} places a one on a forbidden entry")
    return A.replace_rows({i: new_i, j: new_j})

# %% ../../nbs/core/moves.ipynb #f03c6d1a
def is_switch_adjacent(
    A: BinaryMatrix,  # first state
    B: BinaryMatrix  # second state
) -> Optional[tuple[int, int, int, int]]: # (i, j, k, l) with i < j and k < l, or None
    """Find the single switch turning A into B, if there is one."""
    A.same_spec(B)
    changed = [x for x in range(A.m) if A.rows[x] != B.rows[x]]
    if len(changed) != 2:
        return None
    i, j = changed
    di, dj = A.rows[i] ^ B.rows[i], A.rows[j] ^ B.rows[j]
    if di != dj or di.bit_count() != 2:
        return None
    k, l = mask_columns(di, A.n)
    a_ik, a_il, a_jk, a_jl = A.entry(i, k), A.entry(i, l), A.entry(j, k), A.entry(j, l)
    if (a_ik, a_il, a_jk, a_jl) not in ((1, 0, 0, 1), (0, 1, 1, 0)):
        return None
    spec = A.parent_spec
    if any(spec.is_forbidden(x, y) for x in (i, j) for y in (k, l)):
        return None
    return i, j, k, l

# %% ../../nbs/core/moves.ipynb #2dd5c847
def apply_switch(
    A: BinaryMatrix,  # current state
    i: int,  # first row
    j: int,  # second row
    k: int,  # first column
    l: int  # second column
) -> BinaryMatrix: # state with the 2x2 checkerboard flipped
    """Swap checkerboard C1 = [[1,0],[0,1]] and C2 = [[0,1],[1,0]] on rows i, j and columns k, l."""
    i, j = sorted((i, j))
    k, l = sorted((k, l))
    if i == j or k == l or not (0 <= i and j < A.m and 0 <= k and l < A.n):
        raise IndexOutOfRange(f"Invalid switch position rows ({i + 1},{j + 1}) columns ({k + 1},{l + 1})")
    block = (A.entry(i, k), A.entry(i, l), A.entry(j, k), A.entry(j, l))
    if block not in ((1, 0, 0, 1), (0, 1, 1, 0)):
        raise NotACheckerboard(f"Rows ({i + 1},{j + 1}) columns ({k + 1},{l + 1}) hold {block}")
    spec = A.parent_spec
    if any(spec.is_forbidden(x, y) for x in (i, j) for y in (k, l)):
        raise ForbiddenEntryTouched(f"Switch on rows ({i + 1},{j + 1}) columns ({k + 1},{l + 1}) hits F")
    flip = column_bit(A.n, k) | column_bit(A.n, l)
    return _moved(A, i, j, A.rows[i] ^ flip, A.rows[j] ^ flip)

# %% ../../nbs/core/moves.ipynb #8e51a3f0
def trade_by_mask(
    A: BinaryMatrix,  # current state
    stats: RowPairStats,  # statistics of A for the traded rows
    s_mask: int  # trade columns that row i keeps ones on
) -> BinaryMatrix: # state after the trade
    """Binomial trade given as a column mask; row j receives the rest of the trade columns."""
    t_mask = stats.trade_mask
    if s_mask & ~t_mask or s_mask.bit_count() != stats.u:
        raise BadTradeSet(f"Trade set must be {stats.u} of the trade columns {[c + 1 for c in stats.trade_columns]}")
    i, j = stats.i, stats.j
    new_i = (A.rows[i] & ~t_mask) | s_mask
    new_j = (A.rows[j] & ~t_mask) | (t_mask & ~s_mask)
    return _moved(A, i, j, new_i, new_j)

def apply_trade(
    A: BinaryMatrix,  # current state
    i: int,  # first row
    j: int,  # second row, j > i
    S: Iterable[int]  # trade columns where row i holds its ones afterwards
) -> BinaryMatrix: # member of the binomial neighborhood of A
    """Redistribute the ones of rows i and j over their trade columns."""
    stats = row_pair_stats(A, i, j)
    S = set(S)
    if any(not (0 <= k < A.n) for k in S):
        raise BadTradeSet(f"Trade set {sorted(k + 1 for k in S)} leaves the matrix")
    return trade_by_mask(A, stats, columns_mask(S, A.n))

def trade_neighbors(
    A: BinaryMatrix,  # current state
    i: int,  # first row
    j: int  # second row, j > i
) -> list[BinaryMatrix]: # all C(u+l, u) members of the binomial neighborhood, A included
    """Enumerate every binomial trade of a row pair."""
    stats = row_pair_stats(A, i, j)
    return [trade_by_mask(A, stats, columns_mask(S, A.n))
            for S in combinations(stats.trade_columns, stats.u)]
