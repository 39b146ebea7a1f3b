"""Seeded random streams over a counter-based generator."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/samplers/rng.ipynb.

# %% ../../nbs/samplers/rng.ipynb #b4f1c207
from __future__ import annotations
from fractions import Fraction
from typing import Sequence, TypeVar

import numpy as np

from ..core.errors import ChainError

# %% auto #0
__all__ = ['RngStream']

# %% ../../nbs/samplers/rng.ipynb #e8a3d519
T = TypeVar("T")

# %% ../../nbs/samplers/rng.ipynb #57c0dd8e
class RngStream:
    """A reproducible stream of draws backed by numpy's Philox generator.

    Child streams come from `SeedSequence.spawn`, so a run with seed `s` and `k` workers always
    hands worker `w` the same stream regardless of scheduling.
    """

    def __init__(
        self,
        seed: int | np.random.SeedSequence  # 64-bit seed or an already spawned seed sequence
    ):
        if isinstance(seed, np.random.SeedSequence):
            self.seed_sequence = seed
            self.seed = int(seed.entropy)
        else:
            if not 0 <= int(seed) < 2**64:
                raise ChainError(f"Seed must fit in 64 unsigned bits, got {seed}")
            self.seed = int(seed)
            self.seed_sequence = np.random.SeedSequence(self.seed)
        self.generator = np.random.Generator(np.random.Philox(self.seed_sequence))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, spawn_key={self.seed_sequence.spawn_key})"

    def spawn(
        self,
        count: int  # number of independent child streams
    ) -> list[RngStream]: # child streams, deterministic in (seed, count)
        """Split off independent streams, one per chain run."""
        return [RngStream(child) for child in self.seed_sequence.spawn(count)]

    def below(
        self,
        bound: int  # exclusive upper bound, positive
    ) -> int: # uniform integer in [0, bound)
        """Uniform integer; numpy draws it by rejection, so there is no modulo bias."""
        return int(self.generator.integers(bound))

    def random(self) -> float: # uniform float in [0, 1)
        return float(self.generator.random())

    def bernoulli(
        self,
        p: Fraction  # success probability as an exact rational
    ) -> bool: # True with probability exactly p
        """Exact coin flip: compare a uniform integer against the numerator."""
        p = Fraction(p)
        if p <= 0:
            return False
        if p >= 1:
            return True
        return self.below(p.denominator) < p.numerator

    def pair(
        self,
        size: int  # number of items, at least 2
    ) -> tuple[int, int]: # uniform unordered pair (a, b) with a < b
        a = self.below(size)
        b = self.below(size - 1)
        if b >= a:
            b += 1
        return (a, b) if a < b else (b, a)

    def sample(
        self,
        items: Sequence[T],  # population
        k: int  # number to draw, 0 <= k <= len(items)
    ) -> list[T]: # k distinct items in uniformly random order
        """Partial Fisher-Yates shuffle."""
        pool = list(items)
        for t in range(k):
            s = t + self.below(len(pool) - t)
            pool[t], pool[s] = pool[s], pool[t]
        return pool[:k]
