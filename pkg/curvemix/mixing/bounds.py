"""Mixing times and the spectral bounds around them."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/mixing/bounds.ipynb.

# %% ../../nbs/mixing/bounds.ipynb #f91c2d07
from __future__ import annotations
import csv
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, TextIO, Union

import numpy as np

from ..core.errors import BoundViolated, HorizonExceeded, MixingError, MonotonicityViolated, PeriodicChain, Reducible
from ..spectral.eigen import EIGEN_TOL, Spectrum, spectral_report
from ..spectral.transitions import TransitionMatrix
from .evolution import MONOTONE_TOL, as_float_matrix, worst_case_tv

# %% auto #0
__all__ = ['MixingReport', 'default_horizon', 'mixing_time', 'check_mixing_bounds']

# %% ../../nbs/mixing/bounds.ipynb #0c5e8b3a
logger = logging.getLogger(__name__)

@dataclass
class MixingReport:
    """Mixing time of one chain with its spectral sandwich."""

    epsilon: float  # target TV distance
    tau: int  # smallest t with d(t) <= epsilon
    lambda_star: float  # max(lambda_1, |lambda_min|)
    N: int  # number of states
    curve: np.ndarray = field(repr=False)  # d(t) for t = 0..tau
    horizon: int = 0  # scan limit used
    label: str = "P"

    @property
    def lower_bound(self) -> float: # (1/2) lambda_*/(1 - lambda_*) ln(1/(2 epsilon))
        return 0.5 * self.lambda_star / (1.0 - self.lambda_star) * math.log(1.0 / (2.0 * self.epsilon))

    @property
    def upper_bound(self) -> float: # (1 - lambda_*)^-1 (ln N + ln(1/epsilon))
        return (math.log(self.N) + math.log(1.0 / self.epsilon)) / (1.0 - self.lambda_star)

    @property
    def lower_holds(self) -> bool: # with one step of slack for the ceiling
        return math.ceil(self.lower_bound - EIGEN_TOL) - 1 <= self.tau

    @property
    def upper_holds(self) -> bool:
        return self.tau <= self.upper_bound + EIGEN_TOL * max(1.0, self.upper_bound)

    @property
    def passed(self) -> bool: return self.lower_holds and self.upper_holds

    def to_dict(
        self,
        curve: bool = False  # include d(t)
    ) -> dict:
        d = dict(label=self.label, epsilon=self.epsilon, tau=self.tau, lambda_star=self.lambda_star, N=self.N,
                 lower_bound=self.lower_bound, upper_bound=self.upper_bound, lower_holds=self.lower_holds,
                 upper_holds=self.upper_holds, horizon=self.horizon)
        if curve:
            d["curve"] = [float(x) for x in self.curve]
        return d

    def to_csv(
        self,
        stream: TextIO  # writable text stream
    ):
        """Write the (t, d(t)) curve."""
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["t", "d"])
        for t, d in enumerate(self.curve):
            writer.writerow([t, repr(float(d))])

# %% ../../nbs/mixing/bounds.ipynb #5a72e4b8
def default_horizon(
    spectrum: Spectrum,  # spectrum of the chain
    N: int  # number of states
) -> int: # 10 * ceil(relaxation * ln(4N))
    rel = spectrum.relaxation
    if not math.isfinite(rel):
        raise MixingError("No finite horizon for a periodic or reducible chain")
    return 10 * max(1, math.ceil(rel * math.log(4 * N)))

def mixing_time(
    P: Union[TransitionMatrix, np.ndarray],  # symmetric stochastic matrix
    epsilon: float,  # target distance
    horizon: Optional[int] = None,  # scan limit, default_horizon when None
    tol: float = EIGEN_TOL  # eigenvalue tolerance
) -> MixingReport: # tau(epsilon) and the worst-case curve up to it
    """Scan t upward until the worst-case TV distance to uniform drops to epsilon.

    The worst-case distance is non-increasing in t, so the first such t is the mixing time; the scan
    asserts this at every step.
    """
    if epsilon <= 0:
        raise MixingError(f"epsilon must be positive, got {epsilon}")
    label = P.label if isinstance(P, TransitionMatrix) else "P"
    M = as_float_matrix(P)
    N = len(M)
    spectrum = spectral_report(P, tol)
    if N > 1 and spectrum.is_reducible:
        raise Reducible(f"{label} is reducible: no mixing time")
    if spectrum.is_periodic:
        raise PeriodicChain(f"{label} is periodic (lambda_min = {spectrum.lambda_min:.12g}); use a lazy chain")
    horizon = default_horizon(spectrum, N) if horizon is None else horizon
    D = np.eye(N)
    curve = [worst_case_tv(D)]
    t = 0
    while curve[-1] > epsilon:
        if t == horizon:
            raise HorizonExceeded(f"{label}: d({t}) = {curve[-1]:.6g} > {epsilon} at the horizon")
        t += 1
        D = D @ M
        D /= D.sum(axis=1, keepdims=True)
        curve.append(worst_case_tv(D))
        if curve[-1] > curve[-2] + MONOTONE_TOL:
            raise MonotonicityViolated(f"{label}: d({t}) = {curve[-1]:.15g} exceeds d({t - 1}) = {curve[-2]:.15g}")
    report = MixingReport(float(epsilon), t, spectrum.lambda_star, N, np.array(curve), horizon, label)
    logger.debug("%s: tau(%g) = %d", label, epsilon, t)
    return report

def check_mixing_bounds(
    P: Union[TransitionMatrix, np.ndarray],  # symmetric stochastic matrix of an ergodic chain
    epsilon: float,  # target distance
    horizon: Optional[int] = None,  # scan limit
    tol: float = EIGEN_TOL,  # eigenvalue tolerance
    strict: bool = True  # raise BoundViolated when the sandwich fails
) -> MixingReport: # the report; report.passed carries the verdict
    """(1/2) lambda_*/(1 - lambda_*) ln(1/(2 eps)) <= tau(eps) <= (1 - lambda_*)^-1 (ln N + ln(1/eps))."""
    report = mixing_time(P, epsilon, horizon, tol)
    if not report.passed:
        logger.warning("%s: tau = %d outside [%.6g, %.6g]", report.label, report.tau, report.lower_bound,
                       report.upper_bound)
        if strict:
            raise BoundViolated(f"{report.label}: tau({epsilon}) = {report.tau}, bounds {report.to_dict()}")
    return report
