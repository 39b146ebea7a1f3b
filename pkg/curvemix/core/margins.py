"""Instance model: row and column sums plus the set of forbidden entries."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/margins.ipynb.

# %% ../../nbs/core/margins.ipynb #3b8e41d0
from __future__ import annotations
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Mapping

from .errors import (InstanceError, MarginMismatch, InfeasibleRow, InfeasibleColumn, ForbiddenOutOfRange,
                     DuplicateForbidden)

# %% auto #0
__all__ = ['MarginSpec', 'column_bit', 'validate_instance', 'make_instance', 'regular_instance', 'instance_from_dict',
           'load_instance', 'instance_to_dict']

# %% ../../nbs/core/margins.ipynb #7f20c6aa
logger = logging.getLogger(__name__)

# %% ../../nbs/core/margins.ipynb #a6d4e913
def column_bit(
    n: int,  # number of columns
    j: int  # 0-based column index
) -> int: # mask with only column j set
    """Bit of column `j` in a row of width `n` (column 0 is the most significant bit)."""
    return 1 << (n - 1 - j)

# %% ../../nbs/core/margins.ipynb #5c01b7e8
@dataclass(frozen=True)
class MarginSpec:
    """Row sums, column sums and forbidden entries of a binary matrix instance."""

    r: tuple[int, ...]  # row sums, one per row
    c: tuple[int, ...]  # column sums, one per column
    forbidden: frozenset[tuple[int, int]] = field(
        default_factory=frozenset
    )  # 0-based (row, column) entries forced to zero

    def __post_init__(self):
        """Normalise containers and reject structurally broken margins."""
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        object.__setattr__(self, "forbidden", frozenset((int(i), int(j)) for i, j in self.forbidden))
        if not self.r or not self.c:
            raise InstanceError("An instance needs at least one row and one column")
        if any(x < 0 for x in self.r + self.c):
            raise InstanceError(f"Margins must be non-negative, got r={self.r} c={self.c}")

    @property
    def m(self) -> int: # number of rows
        return len(self.r)

    @property
    def n(self) -> int: # number of columns
        return len(self.c)

    @cached_property
    def r_max(self) -> int: # largest row sum
        return max(self.r)

    @cached_property
    def rho_total(self) -> int: # total number of ones in every state
        return sum(self.r)

    @cached_property
    def full_mask(self) -> int: # row mask with every column set
        return (1 << self.n) - 1

    @cached_property
    def forbidden_masks(self) -> tuple[int, ...]: # per-row mask of forbidden columns
        masks = [0] * self.m
        for i, j in self.forbidden:
            if 0 <= i < self.m and 0 <= j < self.n:
                masks[i] |= column_bit(self.n, j)
        return tuple(masks)

    @cached_property
    def allowed_masks(self) -> tuple[int, ...]: # per-row mask of columns that may hold a one
        return tuple(self.full_mask & ~f for f in self.forbidden_masks)

    def is_forbidden(
        self,
        i: int,  # 0-based row
        j: int  # 0-based column
    ) -> bool: # True if entry (i, j) must be zero
        """Check whether an entry is forbidden."""
        return (i, j) in self.forbidden

    def is_square_regular(self) -> bool: # True if n x n with every margin equal
        """Check for the square d-regular setting (directed graphs with fixed in/out degree)."""
        return self.m == self.n and len(set(self.r) | set(self.c)) == 1

    def describe(self) -> str: # short human-readable summary
        """One-line summary used in logs and reports."""
        return f"{self.m}x{self.n} r={list(self.r)} c={list(self.c)} |F|={len(self.forbidden)}"

# %% ../../nbs/core/margins.ipynb #e2c7d85f
def validate_instance(
    spec: MarginSpec  # instance to check
) -> MarginSpec: # the same instance with its caches populated
    """Check every instance invariant, raising the first violation found."""
    for i, j in sorted(spec.forbidden):
        if not (0 <= i < spec.m and 0 <= j < spec.n):
            raise ForbiddenOutOfRange(f"Forbidden entry ({i + 1}, {j + 1}) outside {spec.m}x{spec.n}")
    if sum(spec.r) != sum(spec.c):
        raise MarginMismatch(f"Row sums total {sum(spec.r)} but column sums total {sum(spec.c)}")
    row_blocked = [0] * spec.m
    col_blocked = [0] * spec.n
    for i, j in spec.forbidden:
        row_blocked[i] += 1
        col_blocked[j] += 1
    for i, ri in enumerate(spec.r):
        if ri > spec.n - row_blocked[i]:
            raise InfeasibleRow(f"Row {i + 1} needs {ri} ones but only {spec.n - row_blocked[i]} entries are allowed")
    for j, cj in enumerate(spec.c):
        if cj > spec.m - col_blocked[j]:
            raise InfeasibleColumn(
                f"Column {j + 1} needs {cj} ones but only {spec.m - col_blocked[j]} entries are allowed")
    # populate caches
    spec.r_max, spec.rho_total, spec.allowed_masks
    logger.debug("Validated instance %s", spec.describe())
    return spec

# %% ../../nbs/core/margins.ipynb #0d93b6a1
def _dedupe_forbidden(
    pairs: Iterable[tuple[int, int]]  # forbidden pairs, possibly with repeats
) -> frozenset[tuple[int, int]]: # the pairs as a set
    seen: set[tuple[int, int]] = set()
    for i, j in pairs:
        key = (int(i), int(j))
        if key in seen:
            raise DuplicateForbidden(f"Forbidden entry ({key[0] + 1}, {key[1] + 1}) listed twice")
        seen.add(key)
    return frozenset(seen)

def make_instance(
    rows: Iterable[int],  # row sums
    cols: Iterable[int],  # column sums
    forbidden: Iterable[tuple[int, int]] = (),  # 0-based forbidden entries
    diagonal_forbidden: bool = False  # also forbid every (i, i)
) -> MarginSpec: # validated instance
    """Build and validate an instance in one call."""
    r, c = tuple(rows), tuple(cols)
    pairs = _dedupe_forbidden(forbidden)
    if diagonal_forbidden:
        if len(r) != len(c):
            raise InstanceError("diagonal_forbidden requires a square instance")
        pairs = pairs | {(i, i) for i in range(len(r))}
    return validate_instance(MarginSpec(r, c, pairs))

def regular_instance(
    n: int,  # rows and columns
    d: int,  # every row and column sum
    diagonal_forbidden: bool = True  # forbid self-loops
) -> MarginSpec: # validated square d-regular instance
    """Square instance with every margin equal to `d`."""
    return make_instance([d] * n, [d] * n, diagonal_forbidden=diagonal_forbidden)

# %% ../../nbs/core/margins.ipynb #c48a2f06
def instance_from_dict(
    data: Mapping[str, Any]  # parsed instance JSON with 1-based forbidden entries
) -> MarginSpec: # validated instance
    """Build an instance from its JSON form."""
    missing = {"rows", "cols"} - set(data)
    if missing:
        raise InstanceError(f"Instance is missing keys: {sorted(missing)}")
    forbidden = []
    for entry in data.get("forbidden", []):
        if len(entry) != 2:
            raise InstanceError(f"Forbidden entry {entry!r} is not a (row, column) pair")
        forbidden.append((int(entry[0]) - 1, int(entry[1]) - 1))
    return make_instance(data["rows"], data["cols"], forbidden,
                         diagonal_forbidden=bool(data.get("diagonal_forbidden", False)))

def load_instance(
    path: str | Path  # path to an instance JSON file
) -> MarginSpec: # validated instance
    """Read an instance file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise InstanceError(f"{path}: not valid JSON ({e})") from e
    logger.debug("Loaded instance from %s", path)
    return instance_from_dict(data)

def instance_to_dict(
    spec: MarginSpec  # instance to serialise
) -> dict: # JSON-compatible form with 1-based forbidden entries
    """Convert an instance to its JSON form."""
    return {
        "rows": list(spec.r),
        "cols": list(spec.c),
        "forbidden": [[i + 1, j + 1] for i, j in sorted(spec.forbidden)],
    }
