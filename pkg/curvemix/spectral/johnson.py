"""Closed-form spectra of Johnson graphs."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/johnson.ipynb.

# %% ../../nbs/spectral/johnson.ipynb #9d1f2c6b
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np

from ..core.errors import BadPQ

# %% auto #0
__all__ = ['JohnsonSpectrum', 'johnson_spectrum', 'johnson_min_bound', 'johnson_adjacency', 'johnson_graph']

# %% ../../nbs/spectral/johnson.ipynb #30b8e7a4
@dataclass(frozen=True)
class JohnsonSpectrum:
    """Distinct eigenvalues of J(p, q) with multiplicities, in decreasing order."""

    p: int  # ground set size
    q: int  # subset size
    pairs: tuple[tuple[int, int], ...]  # (eigenvalue (q-i)(p-q-i) - i, multiplicity C(p,i) - C(p,i-1))

    @property
    def min_bound(self) -> Fraction: return johnson_min_bound(self.p)

    @property
    def size(self) -> int: # number of vertices C(p, q)
        return sum(mult for _, mult in self.pairs)

    def multiset(self) -> list[int]: # every eigenvalue repeated by multiplicity, descending
        return [mu for mu, mult in self.pairs for _ in range(mult)]

    def as_array(self) -> np.ndarray: return np.array(self.multiset(), dtype=np.float64)

# %% ../../nbs/spectral/johnson.ipynb #c6e45a12
def johnson_spectrum(
    p: int,  # ground set size
    q: int  # subset size, 1 <= q <= p
) -> JohnsonSpectrum: # closed-form spectrum
    """Spectrum of the Johnson graph J(p, q).

    J(p, q) and J(p, p-q) are isomorphic, so only i = 0..min(q, p-q) contributes.
    """
    if not 1 <= q <= p:
        raise BadPQ(f"Johnson graph J({p}, {q}) needs 1 <= q <= p")
    pairs = []
    for i in range(min(q, p - q) + 1):
        mult = comb(p, i) - (comb(p, i - 1) if i else 0)
        pairs.append(((q - i) * (p - q - i) - i, mult))
    spectrum = JohnsonSpectrum(p, q, tuple(pairs))
    assert spectrum.size == comb(p, q)
    return spectrum

def johnson_min_bound(
    p: int  # ground set size, >= 1
) -> Fraction: # -(p+1)^2 / 4
    """Lower bound on mu - q(p-q) over every eigenvalue mu of J(p, q) and every q."""
    if p < 1:
        raise BadPQ(f"p must be positive, got {p}")
    return Fraction(-(p + 1) ** 2, 4)

# %% ../../nbs/spectral/johnson.ipynb #f0a6d3b8
def johnson_graph(
    p: int,  # ground set size
    q: int  # subset size
) -> nx.Graph: # nodes are q-subsets of range(p) as frozensets
    if not 1 <= q <= p:
        raise BadPQ(f"Johnson graph J({p}, {q}) needs 1 <= q <= p")
    G = nx.Graph()
    nodes = [frozenset(c) for c in combinations(range(p), q)]
    G.add_nodes_from(nodes)
    G.add_edges_from((a, b) for a, b in combinations(nodes, 2) if len(a & b) == q - 1)
    return G

def johnson_adjacency(
    p: int,  # ground set size
    q: int  # subset size
) -> tuple[np.ndarray, list[frozenset[int]]]: # adjacency matrix and the subset labelling its rows
    G = johnson_graph(p, q)
    labels = sorted(G.nodes, key=sorted)
    return nx.to_numpy_array(G, nodelist=labels), labels
