"""Chain descriptors: which Markov chain to run and with which exact parameters."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/samplers/chains.ipynb.

# %% ../../nbs/samplers/chains.ipynb #1d7e4a90
from __future__ import annotations
import re
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from ..core.errors import ChainError, BadDelta, BadChainDescriptor, KTooLarge
from ..core.margins import MarginSpec

# %% auto #0
__all__ = ['ChainKind', 'ChainSpec', 'KTV', 'KTV_CLASSIC', 'CURVEBALL', 'EDGE', 'parse_rational', 'parse_chain']

# %% ../../nbs/samplers/chains.ipynb #83b2d6f5
class ChainKind(str, Enum):
    """Supported chains."""
    GAMMA_SWITCH = "gamma"
    KTV_SWITCH = "ktv"
    KTV_CLASSIC = "ktv-classic"  # same chain as KTV_SWITCH, realized by drawing two columns
    EDGE_SWITCH = "edge"
    CURVEBALL = "curveball"
    K_CURVEBALL = "kcurveball"

# %% ../../nbs/samplers/chains.ipynb #c9e5071b
@dataclass(frozen=True)
class ChainSpec:
    """A chain kind plus its parameters."""

    kind: ChainKind  # which chain
    gamma: Optional[Fraction] = None  # per-switch probability, gamma-switch only
    k: Optional[int] = None  # number of disjoint row pairs, k-Curveball only
    laziness: Optional[Fraction] = None  # delta of the lazy wrapper (1-delta)I + delta*P

    def __post_init__(self):
        """Validate parameters against the kind."""
        object.__setattr__(self, "kind", ChainKind(self.kind))
        if self.kind is ChainKind.GAMMA_SWITCH:
            if self.gamma is None or Fraction(self.gamma) <= 0:
                raise ChainError(f"gamma-switch needs gamma > 0, got {self.gamma}")
            object.__setattr__(self, "gamma", Fraction(self.gamma))
        elif self.gamma is not None:
            raise ChainError(f"{self.kind.value} does not take gamma")
        if self.kind is ChainKind.K_CURVEBALL:
            if self.k is None or int(self.k) < 1:
                raise ChainError(f"k-Curveball needs k >= 1, got {self.k}")
            object.__setattr__(self, "k", int(self.k))
        elif self.k is not None:
            raise ChainError(f"{self.kind.value} does not take k")
        if self.laziness is not None:
            delta = Fraction(self.laziness)
            if not 0 < delta < 1:
                raise BadDelta(f"Laziness must lie in (0, 1), got {delta}")
            object.__setattr__(self, "laziness", delta)

    @property
    def is_switch(self) -> bool: # True for chains whose moves are single switches
        return self.kind in (ChainKind.GAMMA_SWITCH, ChainKind.KTV_SWITCH, ChainKind.KTV_CLASSIC,
                             ChainKind.EDGE_SWITCH)

    def gamma_for(
        self,
        spec: MarginSpec  # instance the chain runs on
    ) -> Fraction: # per-switch probability of the equivalent gamma-switch chain
        """Gamma of the switch chain this descriptor denotes, before laziness."""
        if self.kind is ChainKind.GAMMA_SWITCH:
            return self.gamma
        if self.kind in (ChainKind.KTV_SWITCH, ChainKind.KTV_CLASSIC):
            if spec.n < 2:
                raise ChainError("The KTV-switch chain needs at least two columns")
            return Fraction(2, spec.n * (spec.n - 1))
        if self.kind is ChainKind.EDGE_SWITCH:
            if spec.rho_total < 2:
                raise ChainError("The edge-switch chain needs at least two ones")
            return Fraction(comb(spec.m, 2), comb(spec.rho_total, 2))
        raise ChainError(f"{self.kind.value} is not a switch chain")

    def check_for(
        self,
        spec: MarginSpec  # instance the chain runs on
    ) -> ChainSpec: # self, for chaining
        """Reject parameters that cannot work on this instance."""
        if self.kind is ChainKind.K_CURVEBALL and 2 * self.k > spec.m:
            raise KTooLarge(f"{self.k} disjoint row pairs need {2 * self.k} rows, instance has {spec.m}")
        return self

    def lazy(
        self,
        delta: Fraction  # extra laziness
    ) -> ChainSpec: # chain with laziness delta composed onto any existing one
        delta = Fraction(delta)
        return replace(self, laziness=delta if self.laziness is None else self.laziness * delta)

    def base(self) -> ChainSpec: # same chain without laziness
        return replace(self, laziness=None)

    def describe(self) -> str: # descriptor string accepted by parse_chain
        """Inverse of parse_chain."""
        if self.kind is ChainKind.GAMMA_SWITCH:
            text = f"gamma:{self.gamma}"
        elif self.kind is ChainKind.K_CURVEBALL:
            text = f"kcurveball:{self.k}"
        else:
            text = self.kind.value
        if self.laziness is not None:
            text += f"@lazy:{self.laziness}"
        return text

    def __str__(self) -> str:
        return self.describe()

# %% ../../nbs/samplers/chains.ipynb #a0f36e12
KTV = ChainSpec(ChainKind.KTV_SWITCH)
KTV_CLASSIC = ChainSpec(ChainKind.KTV_CLASSIC)
CURVEBALL = ChainSpec(ChainKind.CURVEBALL)
EDGE = ChainSpec(ChainKind.EDGE_SWITCH)

# %% ../../nbs/samplers/chains.ipynb #5f4b8d27
_RATIONAL = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")

def parse_rational(
    text: str  # "p/q" or "p"
) -> Fraction: # exact value
    """Parse a non-negative rational written as p/q."""
    match = _RATIONAL.match(text)
    if not match or match.group(2) == "0":
        raise BadChainDescriptor(f"Not a rational p/q: {text!r}")
    return Fraction(int(match.group(1)), int(match.group(2) or 1))

def parse_chain(
    descriptor: str  # e.g. "ktv", "gamma:1/3", "kcurveball:2", "edge-lazy:1/2", "curveball@lazy:1/2"
) -> ChainSpec: # parsed chain
    """Parse the chain descriptor mini-language."""
    text = descriptor.strip().lower()
    laziness = None
    if "@" in text:
        text, _, suffix = text.partition("@")
        name, _, value = suffix.partition(":")
        if name != "lazy" or not value:
            raise BadChainDescriptor(f"Unknown suffix {suffix!r} in {descriptor!r}")
        laziness = parse_rational(value)
    name, _, arg = text.partition(":")
    try:
        if name == "gamma":
            chain = ChainSpec(ChainKind.GAMMA_SWITCH, gamma=parse_rational(arg))
        elif name == "kcurveball":
            if not arg.strip().isdigit():
                raise BadChainDescriptor(f"kcurveball needs an integer k, got {arg!r}")
            chain = ChainSpec(ChainKind.K_CURVEBALL, k=int(arg))
        elif name == "edge-lazy":
            chain = ChainSpec(ChainKind.EDGE_SWITCH, laziness=parse_rational(arg))
        elif name in ("ktv", "ktv-classic", "curveball", "edge") and not arg:
            chain = ChainSpec(ChainKind(name))
        else:
            raise BadChainDescriptor(f"Unknown chain {descriptor!r}")
    except (BadChainDescriptor, BadDelta):
        raise
    except ChainError as e:
        raise BadChainDescriptor(f"{descriptor!r}: {e}") from e
    return chain.lazy(laziness) if laziness is not None else chain
