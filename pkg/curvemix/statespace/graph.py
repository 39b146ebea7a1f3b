"""State-space graphs of the chains, Johnson-graph isomorphism of neighborhoods, and irreducibility."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/statespace/graph.ipynb.

# %% ../../nbs/statespace/graph.ipynb #a5e2d7f1
from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np

from ..core.errors import NotIsomorphic
from ..core.moves import row_pair_stats, apply_switch, is_switch_adjacent
from ..samplers.chains import ChainKind, ChainSpec
from .enumeration import StateSpace
from .neighborhoods import Neighborhood, kappa_partition, enumerate_kappas

# %% auto #0
__all__ = ['StateGraph', 'JohnsonCheck', 'build_state_graph', 'check_johnson_isomorphism', 'check_irreducibility']

# %% ../../nbs/statespace/graph.ipynb #3c0f8b6e
logger = logging.getLogger(__name__)

# %% ../../nbs/statespace/graph.ipynb #e1d47a09
@dataclass
class StateGraph:
    """Undirected graph on state indices; an edge means a positive one-step probability."""

    space: StateSpace  # the states
    chain: ChainSpec  # chain whose moves define the edges
    graph: nx.Graph  # nodes 0..N-1, edge attribute "rows" holds the first row pairs seen moving along it

    def adjacency(self) -> np.ndarray: # N x N 0/1 matrix
        return nx.to_numpy_array(self.graph, nodelist=range(self.space.N), dtype=np.int64)

    def degrees(self) -> list[int]: # degree of each state
        return [d for _, d in sorted(self.graph.degree())]

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.graph)

    def components(self) -> list[list[int]]: # connected components, see check_irreducibility
        return check_irreducibility(self)

# %% ../../nbs/statespace/graph.ipynb #6f92c3b8
def build_state_graph(
    space: StateSpace,  # enumerated states
    chain: ChainSpec  # chain (laziness does not change the edges)
) -> StateGraph: # graph of positive transitions between distinct states
    """Build the state-space graph of a chain."""
    G = nx.Graph()
    G.add_nodes_from(range(space.N))
    m = space.spec.m
    if chain.is_switch:
        # every switch chain moves along single switches; gamma only scales the weights
        for t, A in enumerate(space.states):
            for i, j in combinations(range(m), 2):
                stats = row_pair_stats(A, i, j)
                for k in stats.U:
                    for l in stats.L:
                        b = space.index_of(apply_switch(A, i, j, k, l))
                        if not G.has_edge(t, b):
                            G.add_edge(t, b, rows=((i, j),))
    else:
        k = chain.k if chain.kind is ChainKind.K_CURVEBALL else 1
        # fewer than 2k rows: no trade is possible and the graph has no edges
        kappas = enumerate_kappas(m, k) if 2 * k <= m else ()
        for kappa in kappas:
            for hood in kappa_partition(space, kappa):
                for a, b in combinations(hood.members, 2):
                    if not G.has_edge(a, b):
                        G.add_edge(a, b, rows=kappa)
    logger.debug("State graph of %s: %d nodes, %d edges", chain, G.number_of_nodes(), G.number_of_edges())
    return StateGraph(space, chain, G)

# %% ../../nbs/statespace/graph.ipynb #b7c04e25
@dataclass(frozen=True)
class JohnsonCheck:
    """A verified isomorphism between a neighborhood and J(u+l, u)."""

    p: int  # u + l
    q: int  # u
    labels: dict[int, frozenset[int]]  # state index -> positions of row-i ones among the trade columns
    degree: int  # common degree u*l inside the neighborhood

def check_johnson_isomorphism(
    hood: Neighborhood,  # a single-row-pair neighborhood
    space: StateSpace  # the states it indexes
) -> JohnsonCheck: # labels realizing the isomorphism
    """Verify that switch adjacency inside a neighborhood is the Johnson graph J(u+l, u)."""
    i, j = hood.row_pair
    p, q = hood.u + hood.l, hood.u
    labels = {}
    for t in hood.members:
        stats = row_pair_stats(space[t], i, j)
        labels[t] = frozenset(pos for pos, col in enumerate(stats.trade_columns) if col in stats.U)
    if len(set(labels.values())) != len(labels) or len(labels) != comb(p, q):
        raise NotIsomorphic(f"Rows ({i + 1},{j + 1}): {len(labels)} members but C({p},{q}) = {comb(p, q)} labels")
    if any(len(z) != q for z in labels.values()):
        raise NotIsomorphic(f"Rows ({i + 1},{j + 1}): a label is not a {q}-subset")
    degrees = dict.fromkeys(hood.members, 0)
    for a, b in combinations(hood.members, 2):
        adjacent = is_switch_adjacent(space[a], space[b]) is not None
        if adjacent != (len(labels[a] & labels[b]) == q - 1):
            raise NotIsomorphic(
                f"Rows ({i + 1},{j + 1}): states {a} and {b} switch-adjacent={adjacent}, labels {sorted(labels[a])} "
                f"and {sorted(labels[b])}")
        if adjacent:
            degrees[a] += 1
            degrees[b] += 1
    if set(degrees.values()) - {q * (p - q)}:
        raise NotIsomorphic(f"Rows ({i + 1},{j + 1}): degrees {sorted(set(degrees.values()))} != {q * (p - q)}")
    return JohnsonCheck(p, q, labels, q * (p - q))

# %% ../../nbs/statespace/graph.ipynb #0a8de63f
def check_irreducibility(
    graph: StateGraph  # state-space graph
) -> list[list[int]]: # connected components, each sorted, ordered by smallest member
    """Connected components of the state graph; the chain is irreducible iff there is one."""
    components = sorted((sorted(c) for c in nx.connected_components(graph.graph)), key=lambda c: c[0])
    if len(components) > 1:
        logger.warning("%s is reducible on %s: %d components", graph.chain, graph.space.spec.describe(),
                       len(components))
    return components
