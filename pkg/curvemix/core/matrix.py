"""Bit-packed binary matrices and their canonical byte keys."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/matrix.ipynb.

# %% ../../nbs/core/matrix.ipynb #91c0e4d7
from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence

from .errors import InstanceError, SpecMismatch
from .margins import MarginSpec

# %% auto #0
__all__ = ['BinaryMatrix', 'canonical_key', 'from_key', 'key_width']

# %% ../../nbs/core/matrix.ipynb #2fd6a870
@dataclass(frozen=True)
class BinaryMatrix:
    """One state: rows stored as integers, column 0 in the most significant bit."""

    rows: tuple[int, ...]  # row bit vectors of width n
    parent_spec: MarginSpec  # instance this matrix belongs to

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],  # 0/1 entries, row by row
        spec: MarginSpec,  # instance the matrix must satisfy
        check: bool = True  # raise if the margins or forbidden entries do not match
    ) -> BinaryMatrix: # packed matrix
        """Pack a nested 0/1 list."""
        if len(rows) != spec.m or any(len(row) != spec.n for row in rows):
            raise InstanceError(f"Expected a {spec.m}x{spec.n} matrix")
        packed = []
        for row in rows:
            value = 0
            for bit in row:
                if bit not in (0, 1):
                    raise InstanceError(f"Entries must be 0 or 1, got {bit!r}")
                value = (value << 1) | int(bit)
            packed.append(value)
        A = cls(tuple(packed), spec)
        if check:
            A.check()
        return A

    @property
    def m(self) -> int: return self.parent_spec.m

    @property
    def n(self) -> int: return self.parent_spec.n

    def entry(
        self,
        i: int,  # 0-based row
        j: int  # 0-based column
    ) -> int: # 0 or 1
        """Read a single entry."""
        return (self.rows[i] >> (self.n - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]: # nested 0/1 lists
        """Unpack to nested lists."""
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.m)]

    def row_sums(self) -> tuple[int, ...]: # ones per row
        return tuple(row.bit_count() for row in self.rows)

    def col_sums(self) -> tuple[int, ...]: # ones per column
        return tuple(sum((row >> (self.n - 1 - j)) & 1 for row in self.rows) for j in range(self.n))

    def violations(self) -> list[str]: # human-readable reasons the matrix is not in its state space
        """List every way this matrix fails its instance."""
        spec, problems = self.parent_spec, []
        if len(self.rows) != spec.m:
            return [f"has {len(self.rows)} rows, expected {spec.m}"]
        if any(row >> spec.n for row in self.rows):
            problems.append("a row is wider than n")
        if self.row_sums() != spec.r:
            problems.append(f"row sums {list(self.row_sums())} != {list(spec.r)}")
        if self.col_sums() != spec.c:
            problems.append(f"column sums {list(self.col_sums())} != {list(spec.c)}")
        for i, (row, fmask) in enumerate(zip(self.rows, spec.forbidden_masks)):
            if row & fmask:
                problems.append(f"row {i + 1} has a one on a forbidden entry")
        return problems

    def satisfies_spec(self) -> bool: # True if the matrix is a state of its instance
        return not self.violations()

    def check(self) -> BinaryMatrix: # self, for chaining
        """Raise if the matrix is not a state of its instance."""
        problems = self.violations()
        if problems:
            raise InstanceError("Matrix does not satisfy its instance: " + "; ".join(problems))
        return self

    def same_spec(
        self,
        other: BinaryMatrix  # matrix to compare against
    ) -> None:
        """Raise SpecMismatch unless both matrices share an instance."""
        if self.parent_spec != other.parent_spec:
            raise SpecMismatch("Matrices belong to different instances")

    def replace_rows(
        self,
        updates: dict[int, int]  # row index -> new row bits
    ) -> BinaryMatrix: # copy with those rows replaced
        rows = list(self.rows)
        for i, value in updates.items():
            rows[i] = value
        return BinaryMatrix(tuple(rows), self.parent_spec)

    @property
    def key(self) -> bytes: # canonical key
        return canonical_key(self)

    def __str__(self) -> str:
        return "\n".join(format(row, f"0{self.n}b") for row in self.rows)

# %% ../../nbs/core/matrix.ipynb #d5ab3e12
def key_width(
    n: int  # number of columns
) -> int: # bytes per row in a canonical key
    return (n + 7) // 8

def canonical_key(
    A: BinaryMatrix  # matrix to encode
) -> bytes: # row-major key, each row left-aligned in whole bytes
    """Encode a matrix so that byte order equals lexicographic row order."""
    w = key_width(A.n)
    pad = 8 * w - A.n
    return b"".join((row << pad).to_bytes(w, "big") for row in A.rows)

def from_key(
    key: bytes,  # output of canonical_key
    spec: MarginSpec  # instance the key was produced for
) -> BinaryMatrix: # decoded matrix
    """Decode a canonical key."""
    w = key_width(spec.n)
    if len(key) != w * spec.m:
        raise InstanceError(f"Key of {len(key)} bytes does not fit a {spec.m}x{spec.n} matrix")
    pad = 8 * w - spec.n
    rows = tuple(int.from_bytes(key[i * w:(i + 1) * w], "big") >> pad for i in range(spec.m))
    return BinaryMatrix(rows, spec)
