"""Exact evolution of distributions under a transition matrix and total-variation distances."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/mixing/evolution.ipynb.

# %% ../../nbs/mixing/evolution.ipynb #6a0f3e92
from __future__ import annotations
import logging
from fractions import Fraction
from typing import Union

import numpy as np

from ..core.errors import IndexOutOfRange, LengthMismatch, MixingError, MonotonicityViolated
from ..spectral.transitions import TransitionMatrix

# %% auto #0
__all__ = ['MONOTONE_TOL', 'as_float_matrix', 'distribution_at', 'exact_distribution_at', 'tv_distance',
           'worst_case_tv', 'worst_case_tv_curve']

# %% ../../nbs/mixing/evolution.ipynb #d0b1c7a5
logger = logging.getLogger(__name__)

MONOTONE_TOL = 1e-12  # allowed increase of d(t) from rounding

def as_float_matrix(
    P: Union[TransitionMatrix, np.ndarray]  # exact or float transition matrix
) -> np.ndarray: # float64 square matrix
    M = P.to_float() if isinstance(P, TransitionMatrix) else np.asarray(P, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise MixingError(f"Expected a square transition matrix, got shape {M.shape}")
    return M

def _check_start(N: int, x: int):
    if not 0 <= x < N:
        raise IndexOutOfRange(f"Start state {x} outside 0..{N - 1}")

def _check_t(t: int):
    if t < 0:
        raise MixingError(f"t must be non-negative, got {t}")

# %% ../../nbs/mixing/evolution.ipynb #8e47a2dc
def distribution_at(
    P: Union[TransitionMatrix, np.ndarray],  # transition matrix
    x: int,  # start state index
    t: int  # number of steps
) -> np.ndarray: # row x of P^t
    """Repeated vector-matrix products with renormalization after every step."""
    M = as_float_matrix(P)
    _check_start(len(M), x)
    _check_t(t)
    v = np.zeros(len(M))
    v[x] = 1.0
    for _ in range(t):
        v = v @ M
        v /= v.sum()
    return v

def exact_distribution_at(
    P: TransitionMatrix,  # exact transition matrix
    x: int,  # start state index
    t: int  # number of steps
) -> list[Fraction]: # row x of P^t in exact arithmetic
    _check_start(P.N, x)
    _check_t(t)
    v = np.array([Fraction(int(y == x)) for y in range(P.N)], dtype=object)
    for _ in range(t):
        v = v @ P.entries
    return list(v)

def tv_distance(
    p: np.ndarray,  # probability vector
    q: np.ndarray  # probability vector on the same states
) -> float: # (1/2) sum |p - q|
    p, q = np.asarray(p, dtype=np.float64), np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise LengthMismatch(f"Distributions have lengths {p.shape} and {q.shape}")
    return float(0.5 * np.abs(p - q).sum())

# %% ../../nbs/mixing/evolution.ipynb #3b9c51fe
def worst_case_tv(
    D: np.ndarray  # rows are distributions, one per start state
) -> float: # max over rows of the TV distance to uniform
    return float(0.5 * np.abs(D - 1.0 / D.shape[1]).sum(axis=1).max())

def worst_case_tv_curve(
    P: Union[TransitionMatrix, np.ndarray],  # transition matrix with uniform stationary distribution
    horizon: int,  # last time to evaluate
    check_monotone: bool = True  # raise MonotonicityViolated if d(t) increases
) -> np.ndarray: # d(t) for t = 0..horizon
    """Worst-case distance to stationarity, all start states evolved together."""
    M = as_float_matrix(P)
    _check_t(horizon)
    D = np.eye(len(M))
    curve = np.empty(horizon + 1)
    curve[0] = worst_case_tv(D)
    for t in range(1, horizon + 1):
        D = D @ M
        D /= D.sum(axis=1, keepdims=True)
        curve[t] = worst_case_tv(D)
        if check_monotone and curve[t] > curve[t - 1] + MONOTONE_TOL:
            raise MonotonicityViolated(f"d({t}) = {curve[t]:.15g} exceeds d({t - 1}) = {curve[t - 1]:.15g}")
    return curve
