"""Numerical checks of the general spectral facts the comparisons rest on: eigenvalue differences, laziness,
eigenvalue dominance and Dirichlet forms."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/propositions.ipynb.

# %% ../../nbs/spectral/propositions.ipynb #e3b7a120
from __future__ import annotations
import logging
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from ..core.errors import InconsistentVerdict, NegativeLazySpectrum, NotReversible, SpectralError
from ..samplers.rng import RngStream
from .comparison import ComparisonReport
from .eigen import EIGEN_TOL, eigendecompose_symmetric, psd_check
from .transitions import TransitionMatrix

# %% auto #0
__all__ = ['stationary_distribution', 'random_reversible_chain', 'eigen_difference_check', 'lazy_relaxation_check',
           'eigenvalue_dominance_check', 'dirichlet_form', 'dirichlet_equivalence_check', 'dirichlet_gap_check']

# %% ../../nbs/spectral/propositions.ipynb #41c8d9f5
logger = logging.getLogger(__name__)

Matrix = Union[TransitionMatrix, np.ndarray]

def _float(P: Matrix) -> np.ndarray:
    return P.to_float() if isinstance(P, TransitionMatrix) else np.asarray(P, dtype=np.float64)

def _seeded(rng: Union[RngStream, int]) -> RngStream:
    return rng if isinstance(rng, RngStream) else RngStream(rng)

# %% ../../nbs/spectral/propositions.ipynb #7f20b6da
def stationary_distribution(
    X: np.ndarray  # ergodic transition matrix
) -> np.ndarray: # pi with pi X = pi, summing to 1
    values, vectors = np.linalg.eig(X.T)
    v = np.real(vectors[:, np.argmin(np.abs(values - 1.0))])
    return v / v.sum()

def random_reversible_chain(
    size: int,  # number of states, >= 1
    rng: Union[RngStream, int]  # stream or seed
) -> tuple[np.ndarray, np.ndarray]: # (X, pi)
    """Metropolis chain with uniform proposals targeting random positive weights."""
    if size < 1:
        raise SpectralError(f"size must be positive, got {size}")
    g = _seeded(rng).generator
    w = g.uniform(0.1, 1.0, size)
    pi = w / w.sum()
    if size == 1:
        return np.ones((1, 1)), pi
    X = np.minimum(1.0, w[None, :] / w[:, None]) / (size - 1)
    np.fill_diagonal(X, 0.0)
    np.fill_diagonal(X, 1.0 - X.sum(axis=1))
    return X, pi

# %% ../../nbs/spectral/propositions.ipynb #c9a05e14
def eigen_difference_check(
    X: np.ndarray,  # ergodic reversible transition matrix
    alpha: float,  # alpha
    beta: float,  # beta
    pi: Optional[np.ndarray] = None,  # stationary distribution, computed when None
    tol: float = 1e-8,  # tolerance
    strict: bool = True  # raise BoundViolated on a mismatch
) -> ComparisonReport: # values["max_error"] between the two multisets
    """Spectrum of alpha (I - X*) - beta (I - X) equals {0} and {alpha - beta (1 - lambda_i) : i >= 1}.

    The left side is a general eigensolve of the non-symmetric matrix; the right side comes from the
    symmetric conjugate D^1/2 X D^-1/2.
    """
    X = np.asarray(X, dtype=np.float64)
    N = X.shape[0]
    pi = stationary_distribution(X) if pi is None else np.asarray(pi, dtype=np.float64)
    flow = pi[:, None] * X
    if np.abs(flow - flow.T).max() > tol:
        raise NotReversible(f"Detailed balance fails by {np.abs(flow - flow.T).max():.3e}")
    report = ComparisonReport("eigenvalues of alpha(I - X*) - beta(I - X)", tol=tol)
    I, X_star = np.eye(N), np.tile(pi, (N, 1))
    direct = np.sort(np.real(np.linalg.eigvals(alpha * (I - X_star) - beta * (I - X))))
    root = np.sqrt(pi)
    lam = eigendecompose_symmetric(root[:, None] * X / root[None, :], tol).eigenvalues
    closed = np.sort(np.concatenate([[0.0], alpha - beta * (1.0 - lam[1:])]))
    err = float(np.abs(direct - closed).max())
    report.alpha, report.beta = alpha, beta
    report.values.update(max_error=err, N=N)
    report.add("max |spectrum - closed form|", err, tol)
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/propositions.ipynb #5d2f8e71
def lazy_relaxation_check(
    P: Matrix,  # symmetric stochastic matrix
    delta: Fraction,  # laziness in (0, 1)
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise on failure
) -> ComparisonReport: # (1 - lambda_{*,delta})^-1 <= (1/delta)(1 - lambda_*)^-1
    """Relaxation time of the delta-lazy chain, whose second eigenvalue is (1 - delta) + delta lambda_1."""
    delta = float(delta)
    if not 0 < delta < 1:
        raise SpectralError(f"delta must lie in (0, 1), got {delta}")
    M = _float(P)
    base = eigendecompose_symmetric(M, tol)
    lazy = eigendecompose_symmetric((1.0 - delta) * np.eye(len(M)) + delta * M, tol)
    report = ComparisonReport(f"lazy relaxation (delta = {delta:g})", tol=tol)
    if base.N == 1:
        report.vacuous = True
        return report
    report.values.update(lambda_1=base.lambda_1, lambda_star=base.lambda_star, lazy_lambda_1=lazy.lambda_1,
                         lazy_lambda_min=lazy.lambda_min)
    if lazy.lambda_min < -tol:
        if strict:
            raise NegativeLazySpectrum(f"delta = {delta}: lazy chain has eigenvalue {lazy.lambda_min:.12g}")
        report.add("lambda_min(lazy) >= 0", -tol, lazy.lambda_min)
        return report
    expected = (1.0 - delta) + delta * base.lambda_1
    report.add("|lambda_{*,delta} - ((1 - delta) + delta lambda_1)|", abs(lazy.lambda_star - expected), tol)
    report.add("(1 - lambda_{*,delta})^-1 <= (1/delta)(1 - lambda_*)^-1", lazy.relaxation, base.relaxation / delta)
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/propositions.ipynb #a816c3f2
def eigenvalue_dominance_check(
    X: np.ndarray,  # symmetric matrix
    Y: np.ndarray,  # symmetric matrix of the same size
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise on failure
) -> ComparisonReport: # if X - Y is PSD, lambda_i(X) >= lambda_i(Y) for every i
    X, Y = _float(X), _float(Y)
    report = ComparisonReport("eigenvalue dominance", tol=tol)
    premise = psd_check(X - Y, tol)
    report.values["premise_psd"] = premise
    if not premise:
        report.vacuous = True
        report.notes.append("X - Y is not positive semidefinite")
        return report
    gap = eigendecompose_symmetric(X, tol).eigenvalues - eigendecompose_symmetric(Y, tol).eigenvalues
    report.add("min_i lambda_i(X) - lambda_i(Y) >= 0", -tol, float(gap.min(initial=0.0)))
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/propositions.ipynb #19be7c40
def dirichlet_form(
    P: Matrix,  # transition matrix with uniform stationary distribution
    f: np.ndarray  # function on the states
) -> float: # (1/2) sum pi(x) P(x,y) (f(x) - f(y))^2 = f^T (I - P) f / N
    M = _float(P)
    f = np.asarray(f, dtype=np.float64)
    diff = f[:, None] - f[None, :]
    return float(0.5 * np.sum(M * diff * diff) / len(f))

def dirichlet_equivalence_check(
    P: Matrix,  # chain with the larger Dirichlet form
    P_tilde: Matrix,  # chain compared against it
    alpha: float,  # constant
    trials: int = 100,  # random test functions
    rng: Union[RngStream, int] = 0,  # stream or seed
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise InconsistentVerdict when the two verdicts disagree
) -> ComparisonReport: # values["psd"] and values["random_holds"]
    """E~(f, f) <= alpha E(f, f) for every f exactly when alpha (I - P) - (I - P~) is PSD.

    The random search is cross-checked against the PSD verdict; when the matrix is not PSD its most
    negative eigenvector must also violate the form inequality.
    """
    M, Mt = _float(P), _float(P_tilde)
    N = len(M)
    D = alpha * (np.eye(N) - M) - (np.eye(N) - Mt)
    spectrum = eigendecompose_symmetric(D, tol)
    psd = bool(spectrum.N == 0 or spectrum.eigenvalues[-1] >= -tol)
    g = _seeded(rng).generator
    report = ComparisonReport("Dirichlet form vs PSD", alpha=alpha, tol=tol)

    def violates(f: np.ndarray) -> bool:
        return dirichlet_form(Mt, f) > alpha * dirichlet_form(M, f) + tol * float(f @ f) / N

    found = next((t for t in range(trials) if violates(g.standard_normal(N))), None)
    witness = violates(spectrum.eigenvectors[:, -1]) if N and not psd else None
    report.values.update(psd=psd, random_holds=found is None, counterexample_trial=found,
                         min_eigenvalue=spectrum.eigenvalues[-1] if N else 0.0, witness_violates=witness)
    consistent = (psd and found is None) or (not psd and bool(witness))
    report.add("PSD verdict agrees with the form inequality", 0.0, 0.0 if consistent else -1.0)
    if not consistent and strict:
        raise InconsistentVerdict(f"psd = {psd}, random counterexample at trial {found}, witness = {witness}")
    return report

def dirichlet_gap_check(
    P: Matrix,  # chain with uniform stationary distribution
    P_tilde: Matrix,  # second chain on the same states
    alpha: float,  # constant with E~ <= alpha E
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise on failure
) -> ComparisonReport: # 1 - lambda~_1 <= alpha (1 - lambda_1) whenever the premise holds
    M, Mt = _float(P), _float(P_tilde)
    N = len(M)
    report = ComparisonReport("Dirichlet gap comparison", alpha=alpha, tol=tol)
    premise = psd_check(alpha * (np.eye(N) - M) - (np.eye(N) - Mt), tol)
    report.values["premise_psd"] = premise
    if not premise or N == 1:
        report.vacuous = True
        return report
    lam = eigendecompose_symmetric(M, tol).lambda_1
    lam_t = eigendecompose_symmetric(Mt, tol).lambda_1
    report.values.update(lambda_1=lam, lambda_1_tilde=lam_t)
    report.add("1 - lambda~_1 <= alpha (1 - lambda_1)", 1.0 - lam_t, alpha * (1.0 - lam))
    if strict:
        report.raise_if_failed()
    return report
