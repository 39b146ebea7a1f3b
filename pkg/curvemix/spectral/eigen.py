"""Dense symmetric eigendecomposition by parallel Jacobi rotations, and spectral summaries of chains."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/eigen.ipynb.

# %% ../../nbs/spectral/eigen.ipynb #c81f4d0a
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from ..core.errors import NoConvergence, NotSymmetric, SpectralError
from .transitions import TransitionMatrix

# %% auto #0
__all__ = ['EIGEN_TOL', 'JACOBI_REL_TOL', 'JACOBI_MAX_SWEEPS', 'Spectrum', 'round_robin_schedule',
           'eigendecompose_symmetric', 'spectral_report', 'psd_check']

# %% ../../nbs/spectral/eigen.ipynb #1e5d7b39
logger = logging.getLogger(__name__)

EIGEN_TOL = 1e-9  # eigenvalue and inequality tolerance
JACOBI_REL_TOL = 1e-12  # off-diagonal Frobenius norm relative to the matrix norm at convergence
JACOBI_MAX_SWEEPS = 100

# %% ../../nbs/spectral/eigen.ipynb #f4a0c9e7
@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues of a symmetric transition matrix, descending, with the derived chain quantities."""

    eigenvalues: np.ndarray  # all N eigenvalues, descending
    residual_norm: float  # max |M v - lambda v| over the computed pairs
    tol: float = EIGEN_TOL  # tolerance the flags below use
    eigenvectors: Optional[np.ndarray] = field(default=None, repr=False)  # columns match eigenvalues

    @property
    def N(self) -> int: return len(self.eigenvalues)

    @property
    def lambda_1(self) -> float: # second largest eigenvalue, 0 for a single state
        return float(self.eigenvalues[1]) if self.N > 1 else 0.0

    @property
    def lambda_min(self) -> float: # smallest eigenvalue, 0 for a single state
        return float(self.eigenvalues[-1]) if self.N > 1 else 0.0

    @property
    def lambda_star(self) -> float: # max(lambda_1, |lambda_min|)
        return max(self.lambda_1, abs(self.lambda_min))

    @property
    def gap(self) -> float: return 1.0 - self.lambda_star

    @property
    def relaxation(self) -> float: # 1 / gap, inf for periodic or reducible chains
        return 1.0 / self.gap if self.gap > self.tol else float("inf")

    @property
    def relaxation_1(self) -> float: # 1 / (1 - lambda_1), the quantity the comparison results bound
        gap = 1.0 - self.lambda_1
        return 1.0 / gap if gap > self.tol else float("inf")

    @property
    def is_periodic(self) -> bool: # lambda_min = -1
        return self.N > 1 and self.lambda_min <= -1.0 + self.tol

    @property
    def is_reducible(self) -> bool: # lambda_1 = 1
        return self.N > 1 and self.lambda_1 >= 1.0 - self.tol

    @property
    def star_differs(self) -> bool: # |lambda_min| exceeds lambda_1
        return abs(self.lambda_min) > self.lambda_1 + self.tol

    def to_dict(
        self,
        full: bool = False  # include the eigenvalue list
    ) -> dict: # JSON-ready summary
        def num(x: float):
            return x if np.isfinite(x) else None
        d = dict(N=self.N, lambda_1=self.lambda_1, lambda_min=self.lambda_min, lambda_star=self.lambda_star,
                 gap=self.gap, relaxation=num(self.relaxation), relaxation_1=num(self.relaxation_1),
                 periodic=self.is_periodic, reducible=self.is_reducible, star_differs=self.star_differs,
                 residual_norm=self.residual_norm, tol=self.tol)
        if full:
            d["eigenvalues"] = [float(x) for x in self.eigenvalues]
        return d

# %% ../../nbs/spectral/eigen.ipynb #6b2e93d1
@lru_cache(maxsize=32)
def round_robin_schedule(
    N: int  # matrix size
) -> tuple[np.ndarray, ...]: # N-1 (or N) rounds of disjoint (p, q) pairs covering every pair once
    """Round-robin tournament ordering; a dummy index pads odd sizes and its games are dropped."""
    size = N + (N % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [tuple(sorted((players[t], players[size - 1 - t]))) for t in range(size // 2)]
        pairs = [p for p in pairs if p[1] < N]
        rounds.append(np.array(pairs, dtype=np.intp).reshape(-1, 2))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)

def _rotate(A: np.ndarray, V: np.ndarray, pairs: np.ndarray):
    p, q = pairs[:, 0], pairs[:, 1]
    apq = A[p, q]
    active = np.abs(apq) > 0
    if not active.any():
        return
    p, q, apq = p[active], q[active], apq[active]
    # a subnormal apq overflows theta to inf, which gives t = 0: the identity rotation
    with np.errstate(over="ignore"):
        theta = (A[q, q] - A[p, p]) / (2.0 * apq)
    sgn = np.where(theta >= 0, 1.0, -1.0)
    t = sgn / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c
    # disjoint pairs: the rotations of one round commute
    Ap, Aq = A[:, p].copy(), A[:, q].copy()
    A[:, p], A[:, q] = c * Ap - s * Aq, s * Ap + c * Aq
    Ap, Aq = A[p, :].copy(), A[q, :].copy()
    A[p, :], A[q, :] = c[:, None] * Ap - s[:, None] * Aq, s[:, None] * Ap + c[:, None] * Aq
    Vp, Vq = V[:, p].copy(), V[:, q].copy()
    V[:, p], V[:, q] = c * Vp - s * Vq, s * Vp + c * Vq

def eigendecompose_symmetric(
    M: np.ndarray,  # real symmetric N x N matrix
    tol: float = EIGEN_TOL,  # symmetry and residual tolerance
    rel_tol: float = JACOBI_REL_TOL,  # convergence threshold on the off-diagonal norm
    max_sweeps: int = JACOBI_MAX_SWEEPS  # sweep cap
) -> Spectrum: # eigenvalues descending, with eigenvectors
    """Cyclic Jacobi eigensolver with a parallel round-robin rotation order.

    Deterministic for a fixed input; raises NoConvergence when the sweep cap is reached.
    """
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise SpectralError(f"Expected a square matrix, got shape {M.shape}")
    N = M.shape[0]
    asym = float(np.abs(M - M.T).max()) if N else 0.0
    if asym > tol:
        raise NotSymmetric(f"max |M - M^T| = {asym:.3e} exceeds {tol:.1e}")
    A = (M + M.T) / 2.0
    V = np.eye(N)
    norm = float(np.linalg.norm(A))
    schedule = round_robin_schedule(N) if N > 1 else ()
    for sweep in range(max_sweeps + 1):
        off = float(np.sqrt(max(np.sum(A * A) - np.sum(np.diag(A) ** 2), 0.0)))
        if off <= rel_tol * norm:
            break
        if sweep == max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})")
        for pairs in schedule:
            _rotate(A, V, pairs)
        A = (A + A.T) / 2.0
    logger.debug("Jacobi on %d x %d converged after %d sweeps", N, N, sweep)
    values = np.diag(A).copy()
    order = np.argsort(-values, kind="stable")
    values, V = values[order], V[:, order]
    residual = float(np.abs(M @ V - V * values).max()) if N else 0.0
    if residual > tol * max(1.0, float(np.abs(M).sum(axis=1).max(initial=0.0))):
        raise NoConvergence(f"Eigenpair residual {residual:.3e} exceeds tolerance")
    return Spectrum(values, residual, tol, V)

# %% ../../nbs/spectral/eigen.ipynb #92a7c6e0
def spectral_report(
    P: Union[TransitionMatrix, np.ndarray],  # symmetric stochastic matrix
    tol: float = EIGEN_TOL  # tolerance
) -> Spectrum: # spectrum with lambda_1, lambda_min, lambda_star and relaxation time
    """Spectrum of a reversible chain with uniform stationary distribution."""
    if isinstance(P, TransitionMatrix):
        label = P.label
        M = P.check().to_float()
    else:
        label, M = "P", np.asarray(P, dtype=np.float64)
    spectrum = eigendecompose_symmetric(M, tol)
    if spectrum.N and abs(spectrum.eigenvalues[0] - 1.0) > tol:
        raise SpectralError(f"{label}: top eigenvalue {spectrum.eigenvalues[0]} is not 1")
    if spectrum.is_periodic:
        logger.warning("%s is periodic: lambda_min = %.12g", label, spectrum.lambda_min)
    elif spectrum.star_differs:
        logger.warning("%s: lambda_star = |lambda_min| = %.12g exceeds lambda_1 = %.12g", label,
                       abs(spectrum.lambda_min), spectrum.lambda_1)
    logger.debug("%s: lambda_1 = %.12g, lambda_min = %.12g", label, spectrum.lambda_1, spectrum.lambda_min)
    return spectrum

def psd_check(
    M: np.ndarray,  # symmetric matrix
    tol: float = EIGEN_TOL  # allowed negative slack
) -> bool: # True if the smallest eigenvalue is >= -tol
    M = np.asarray(M, dtype=np.float64)
    if M.size == 0:
        return True
    return bool(eigendecompose_symmetric(M, tol).eigenvalues[-1] >= -tol)
