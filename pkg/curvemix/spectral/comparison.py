"""Checkers for the relaxation-time comparisons between the switch, edge-switch, Curveball and k-Curveball chains."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/spectral/comparison.ipynb.

# %% ../../nbs/spectral/comparison.ipynb #0b7d4e2a
from __future__ import annotations
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

import numpy as np

from ..core.errors import (AssumptionViolated, BoundViolated, CheckFailed, ConditionFailed, CurvemixError,
                           NegativeEigenvalue, NotRegular, PeriodicChain, Reducible, SpectralError)
from ..samplers.chains import ChainKind, ChainSpec, CURVEBALL, EDGE, KTV
from ..statespace.enumeration import StateSpace
from ..statespace.neighborhoods import enumerate_kappas, kappa_partition
from .decomposition import SwitchBlock, decompose_switch, kappa_block, tensor_block_spectrum
from .eigen import EIGEN_TOL, Spectrum, eigendecompose_symmetric, spectral_report
from .johnson import johnson_spectrum
from .transitions import TransitionMatrix, build_transition

# %% auto #0
__all__ = ['Inequality', 'ComparisonReport', 'holds', 'block_eigenvalues', 'check_heatbath_condition',
           'ktv_condition_cases', 'verify_relaxation_comparison', 'ktv_block_lower_bound', 'verify_ktv_nonneg',
           'edge_delta', 'verify_edge_comparison', 'verify_regular_bounds', 'verify_k_curveball_bounds',
           'component_spectra']

# %% ../../nbs/spectral/comparison.ipynb #5c81a3f7
logger = logging.getLogger(__name__)

def holds(
    left: float,  # smaller side
    right: float,  # larger side
    tol: float = EIGEN_TOL  # relative tolerance
) -> bool: # left <= right up to tol * max(1, |right|)
    if math.isinf(right) and right > 0:
        return True
    if math.isinf(left):
        return left < 0
    return left <= right + tol * max(1.0, abs(right))

def _num(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (float, np.floating)) and not math.isfinite(x):
        return str(float(x))
    return float(x) if isinstance(x, (float, np.floating)) else x

# %% ../../nbs/spectral/comparison.ipynb #a3d9f0c1
@dataclass(frozen=True)
class Inequality:
    """One checked inequality left <= right, or left <= middle <= right."""

    name: str
    left: float
    right: float
    middle: Optional[float] = None
    tol: float = EIGEN_TOL

    @property
    def passed(self) -> bool:
        if self.middle is None:
            return holds(self.left, self.right, self.tol)
        return holds(self.left, self.middle, self.tol) and holds(self.middle, self.right, self.tol)

    def to_dict(self) -> dict:
        d = dict(name=self.name, left=_num(self.left), right=_num(self.right), passed=self.passed)
        if self.middle is not None:
            d["middle"] = _num(self.middle)
        return d

    def __str__(self) -> str:
        parts = [self.left, self.right] if self.middle is None else [self.left, self.middle, self.right]
        body = " <= ".join(f"{float(x):.10g}" for x in parts)
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {body}"

@dataclass
class ComparisonReport:
    """Outcome of one comparison result checked on one instance."""

    theorem: str  # which result was checked
    inequalities: list[Inequality] = field(default_factory=list)
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    tol: float = EIGEN_TOL
    values: dict = field(default_factory=dict)  # named quantities behind the inequalities
    notes: list[str] = field(default_factory=list)
    vacuous: bool = False  # nothing to check, e.g. a single state
    reducible: bool = False  # a chain the result assumes irreducible is not

    @property
    def passed(self) -> bool:
        return not self.reducible and all(q.passed for q in self.inequalities)

    def failures(self) -> list[Inequality]:
        return [q for q in self.inequalities if not q.passed]

    def add(
        self,
        name: str,  # label of the inequality
        left: float,  # smaller side
        right: float,  # larger side
        middle: Optional[float] = None  # checked value of a sandwich
    ) -> Inequality:
        q = Inequality(name, left, right, middle, self.tol)
        self.inequalities.append(q)
        if not q.passed:
            logger.warning("%s: %s", self.theorem, q)
        return q

    def to_dict(self) -> dict:
        return dict(theorem=self.theorem, passed=self.passed, vacuous=self.vacuous, reducible=self.reducible,
                    tol=self.tol,
                    alpha=_num(self.alpha) if self.alpha is not None else None,
                    beta=_num(self.beta) if self.beta is not None else None,
                    inequalities=[q.to_dict() for q in self.inequalities],
                    values={k: _num(v) for k, v in self.values.items()}, notes=list(self.notes))

    def table(self) -> str: # human-readable PASS/FAIL lines
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.theorem}" + (" (vacuous)" if self.vacuous else "")
        return "\n".join([head] + [f"    {q}" for q in self.inequalities] + [f"    note: {n}" for n in self.notes])

    def raise_if_failed(
        self,
        error: type[CheckFailed] = BoundViolated  # error raised on failure
    ) -> ComparisonReport: # self when every inequality holds
        if not self.passed:
            reasons = [str(q) for q in self.failures()] + (['reducible'] if self.reducible else [])
            raise error(f"{self.theorem}: " + "; ".join(reasons))
        return self

# %% ../../nbs/spectral/comparison.ipynb #1e6f5b08
def _chain_spectrum(space: StateSpace, chain: ChainSpec, tol: float) -> tuple[TransitionMatrix, Spectrum]:
    P = build_transition(space, chain)
    return P, spectral_report(P, tol)

def _require_irreducible(report: ComparisonReport, label: str, spectrum: Spectrum, strict: bool) -> bool:
    if spectrum.is_reducible:
        report.notes.append(f"{label} is reducible (lambda_1 = {spectrum.lambda_1:.12g})")
        report.reducible = True
        if strict:
            raise Reducible(f"{report.theorem}: {label} is reducible on this instance")
        return False
    return True

def block_eigenvalues(
    block: Union[SwitchBlock, np.ndarray],  # a block chain on one class
    tol: float = EIGEN_TOL  # tolerance
) -> np.ndarray: # eigenvalues descending
    M = block.to_float() if isinstance(block, SwitchBlock) else np.asarray(block, dtype=np.float64)
    return eigendecompose_symmetric(M, tol).eigenvalues

def check_heatbath_condition(
    blocks: Sequence[Union[SwitchBlock, np.ndarray]],  # the block chains of every class
    alpha: Fraction,  # alpha, with alpha * beta > 0
    beta: Fraction,  # beta
    spectrum: Optional[Spectrum] = None,  # spectrum of the chain, to check the conclusion
    heat_spectrum: Optional[Spectrum] = None,  # spectrum of its heat-bath variant
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise ConditionFailed when the condition fails
) -> ComparisonReport: # condition verdict, plus the conclusion when both spectra are given
    """Check min over blocks and i >= 1 of min(lambda_i, alpha - beta (1 - lambda_i)) >= 0.

    When it holds, (1/alpha) (1 - lambda_1^heat)^-1 <= (1/beta) (1 - lambda_1)^-1 follows.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0 or beta == 0 or alpha * beta <= 0:
        raise CurvemixError(f"alpha = {alpha}, beta = {beta}: need non-zero constants with alpha * beta > 0")
    report = ComparisonReport("heat-bath condition", alpha=alpha, beta=beta, tol=tol)
    worst, witness = math.inf, None
    for b, block in enumerate(blocks):
        values = block_eigenvalues(block, tol)[1:]
        for lam in values:
            v = min(lam, float(alpha) - float(beta) * (1.0 - lam))
            if v < worst:
                worst, witness = v, (b, lam)
    report.vacuous = witness is None
    if witness is not None:
        report.values.update(min_condition=worst, witness_block=witness[0], witness_eigenvalue=witness[1])
        q = report.add("min over blocks of min(lambda_i, alpha - beta(1 - lambda_i)) >= 0", -tol, worst)
        if not q.passed:
            block = blocks[witness[0]]
            where = f" (rows {block.hood.pairs}, states {block.hood.members})" if isinstance(block, SwitchBlock) else ""
            if strict:
                raise ConditionFailed(
                    f"Block {witness[0]}{where}: eigenvalue {witness[1]:.12g} gives condition value {worst:.12g}")
            return report
    if spectrum is not None and heat_spectrum is not None:
        left = heat_spectrum.relaxation_1 / float(alpha)
        right = spectrum.relaxation_1 / float(beta)
        report.values.update(relaxation_heat=heat_spectrum.relaxation_1, relaxation=spectrum.relaxation_1)
        report.add("(1/alpha) rel_heat <= (1/beta) rel", left, right)
    return report

def ktv_condition_cases(
    n: int,  # number of columns
    r_max: int  # largest row sum
) -> list[tuple[str, Fraction, Fraction]]: # (name, alpha, beta) for the three KTV comparisons
    """The (alpha, beta) pairs behind the Curveball-KTV sandwich.

    The lower bound uses beta = -C(n, 2): the block eigenvalue computation gives
    alpha - beta (1 - lambda) = C(n, 2)(1 - lambda) - 1 = u*l - mu - 1.
    """
    half = comb(n, 2)
    return [("alpha = beta = 1", Fraction(1), Fraction(1)),
            ("alpha = 1, beta = 2n(n-1)/(2 r_max + 1)^2", Fraction(1), Fraction(2 * n * (n - 1), (2 * r_max + 1) ** 2)),
            ("alpha = -1, beta = -C(n,2)", Fraction(-1), Fraction(-half))]

# %% ../../nbs/spectral/comparison.ipynb #f7b2c4d9
def verify_relaxation_comparison(
    space: StateSpace,  # enumerated states, n >= 3
    tol: float = EIGEN_TOL,  # relative tolerance
    strict: bool = True,  # raise on failure
    with_conditions: bool = True  # also check the three block conditions
) -> ComparisonReport: # the Curveball-KTV sandwich
    """2/(n(n-1)) rel_s <= rel_c <= min(1, (2 r_max + 1)^2 / (2n(n-1))) rel_s, with lambda_1 relaxation times."""
    spec = space.spec
    n = spec.n
    report = ComparisonReport("Curveball vs KTV relaxation", tol=tol)
    if space.N == 1:
        report.vacuous = True
        report.notes.append("single state: nothing to compare")
        return report
    if n < 3:
        raise AssumptionViolated(f"The KTV comparison needs n >= 3, got n = {n}")
    _, s_spec = _chain_spectrum(space, KTV, tol)
    _, c_spec = _chain_spectrum(space, CURVEBALL, tol)
    for label, spectrum in (("KTV", s_spec), ("Curveball", c_spec)):
        if spectrum.is_periodic:
            if strict:
                raise PeriodicChain(f"{label} chain is periodic on {spec.describe()}")
            report.notes.append(f"{label} chain is periodic")
        if not _require_irreducible(report, label, spectrum, strict):
            return report
    rel_s, rel_c = s_spec.relaxation_1, c_spec.relaxation_1
    lower = Fraction(2, n * (n - 1))
    upper = min(Fraction(1), Fraction((2 * spec.r_max + 1) ** 2, 2 * n * (n - 1)))
    report.values.update(rel_ktv=rel_s, rel_curveball=rel_c, lower_factor=lower, upper_factor=upper,
                         lambda_1_ktv=s_spec.lambda_1, lambda_1_curveball=c_spec.lambda_1)
    report.add("2/(n(n-1)) rel_s <= rel_c <= min(1, (2r_max+1)^2/(2n(n-1))) rel_s",
               float(lower) * rel_s, float(upper) * rel_s, middle=rel_c)
    if with_conditions:
        blocks = decompose_switch(space, KTV.gamma_for(spec)).all_blocks()
        for name, alpha, beta in ktv_condition_cases(n, spec.r_max):
            case = check_heatbath_condition(blocks, alpha, beta, s_spec, c_spec, tol, strict=False)
            for q in case.inequalities:
                report.inequalities.append(Inequality(f"[{name}] {q.name}", q.left, q.right, q.middle, tol))
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/comparison.ipynb #6c0e1a5b
def ktv_block_lower_bound(
    n: int  # number of columns, >= 2
) -> tuple[Fraction, Fraction]: # (exact minimum KTV block eigenvalue, 1 - (n+1)^2 / (2n(n-1)))
    """Smallest eigenvalue of any KTV block over every (u, l) with u, l >= 1 and u + l <= n."""
    if n < 2:
        raise SpectralError(f"Need n >= 2, got {n}")
    gamma = Fraction(2, n * (n - 1))
    best = Fraction(1)
    for p in range(2, n + 1):
        for u in range(1, p):
            mu_min = johnson_spectrum(p, u).pairs[-1][0]
            best = min(best, 1 + (mu_min - u * (p - u)) * gamma)
    return best, 1 - Fraction((n + 1) ** 2, 2 * n * (n - 1))

def verify_ktv_nonneg(
    space: StateSpace,  # enumerated states, n >= 3
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise NegativeEigenvalue on failure
) -> ComparisonReport: # min eigenvalue of P_KTV in values["min_eigenvalue"]
    """P_KTV has no negative eigenvalue."""
    n = space.spec.n
    if n < 3:
        raise AssumptionViolated(f"KTV non-negativity needs n >= 3, got n = {n}")
    report = ComparisonReport("KTV spectrum non-negative", tol=tol)
    _, spectrum = _chain_spectrum(space, KTV, tol)
    exact, symbolic = ktv_block_lower_bound(n)
    lam_min = float(spectrum.eigenvalues[-1])
    report.values.update(min_eigenvalue=lam_min, block_lower_bound=exact, symbolic_block_bound=symbolic)
    report.add("lambda_min(P_KTV) >= 0", -tol, lam_min)
    report.add("min KTV block eigenvalue over all (u, l) >= 0", -tol, float(exact))
    if n >= 5:
        report.add("1 - (n+1)^2/(2n(n-1)) >= 0", 0.0, float(symbolic))
    if strict and not report.passed:
        raise NegativeEigenvalue(f"{space.spec.describe()}: lambda_min(P_KTV) = {lam_min:.12g}")
    return report

# %% ../../nbs/spectral/comparison.ipynb #93d5a7e1
def edge_delta(
    space: StateSpace  # enumerated states
) -> Fraction: # 1/2 [(n^2/4) C(m,2) / C(rho,2)]^-1, clamped into (0, 1/2]
    spec = space.spec
    delta = Fraction(2 * comb(spec.rho_total, 2), spec.n ** 2 * comb(spec.m, 2))
    return min(delta, Fraction(1, 2))

def _lazy_block_minimum(space: StateSpace, delta: Fraction, tol: float) -> tuple[float, Fraction]:
    """Smallest eigenvalue and smallest diagonal over the blocks (1 - delta) I + delta S_N of the edge chain."""
    decomposition = decompose_switch(space, EDGE.gamma_for(space.spec))
    lam, diag = math.inf, Fraction(1)
    for block in decomposition.all_blocks():
        lazy = block.entries * delta + np.eye(block.hood.size, dtype=np.int64).astype(object) * (1 - delta)
        lam = min(lam, float(eigendecompose_symmetric(lazy.astype(np.float64), tol).eigenvalues[-1]))
        diag = min(diag, min(lazy[t, t] for t in range(block.hood.size)))
    return lam, diag

def verify_edge_comparison(
    space: StateSpace,  # enumerated states
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise on failure
) -> ComparisonReport: # rel_c <= (1/delta) rel_edge
    """Curveball against the delta-lazy edge-switch chain, for the explicit delta of edge_delta."""
    report = ComparisonReport("Curveball vs edge-switch relaxation", tol=tol)
    spec = space.spec
    if space.N == 1 or spec.m < 2:
        report.vacuous = True
        report.notes.append("single state: nothing to compare")
        return report
    P_e, e_spec = _chain_spectrum(space, EDGE, tol)
    if not _require_irreducible(report, "edge-switch", e_spec, strict):
        return report
    _, c_spec = _chain_spectrum(space, CURVEBALL, tol)
    delta = edge_delta(space)
    lazy = P_e.lazy(delta)
    lazy_spec = spectral_report(lazy, tol)
    block_min, block_diag = _lazy_block_minimum(space, delta, tol)
    diagonal = min(lazy[t, t] for t in range(space.N))
    rel_c, rel_e, rel_lazy = c_spec.relaxation_1, e_spec.relaxation_1, lazy_spec.relaxation_1
    report.alpha = delta
    report.values.update(delta=delta, rel_curveball=rel_c, rel_edge=rel_e, rel_lazy_edge=rel_lazy,
                         lambda_min_edge=e_spec.lambda_min, lambda_min_lazy=lazy_spec.lambda_min,
                         min_lazy_diagonal=diagonal)
    if e_spec.star_differs:
        report.notes.append("edge-switch |lambda_min| exceeds lambda_1; compared with lambda_1")
    report.add("lazy edge-switch diagonal >= 1/2", 0.5, float(diagonal))
    report.add("lazy block diagonals >= 1/2", 0.5, float(block_diag))
    report.add("lazy block eigenvalues >= 0", -tol, block_min)
    report.add("lambda_min(lazy edge-switch) >= 0", -tol, lazy_spec.lambda_min)
    report.add("rel_c <= rel_lazy <= (1/delta) rel_edge", rel_c, rel_e / float(delta), middle=rel_lazy)
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/comparison.ipynb #d8e64f20
def verify_regular_bounds(
    space: StateSpace,  # enumerated states of a square d-regular instance
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True  # raise on failure
) -> ComparisonReport: # regular-instance edge-switch bounds
    """rel_c <= ((2d+1)/(2d))^2 rel_edge and lambda_min(P_edge) >= -(1/d + 1/(4d^2)), plus the d >= 2 corollary."""
    spec = space.spec
    if not spec.is_square_regular():
        raise NotRegular(f"{spec.describe()} is not a square instance with equal row and column sums")
    d = spec.r[0]
    report = ComparisonReport(f"regular edge-switch bounds (d = {d})", tol=tol)
    if space.N == 1 or d == 0:
        report.vacuous = True
        report.notes.append("single state: nothing to compare")
        return report
    _, e_spec = _chain_spectrum(space, EDGE, tol)
    if not _require_irreducible(report, "edge-switch", e_spec, strict):
        return report
    _, c_spec = _chain_spectrum(space, CURVEBALL, tol)
    factor = Fraction(2 * d + 1, 2 * d) ** 2
    floor = -(Fraction(1, d) + Fraction(1, 4 * d * d))
    report.values.update(d=d, rel_curveball=c_spec.relaxation_1, rel_edge=e_spec.relaxation_1,
                         lambda_min_edge=e_spec.lambda_min, factor=factor, eigenvalue_floor=floor,
                         regular_delta=1 / factor)
    report.add("rel_c <= ((2d+1)/(2d))^2 rel_edge", c_spec.relaxation_1, float(factor) * e_spec.relaxation_1)
    report.add("lambda_min(P_edge) >= -(1/d + 1/(4d^2))", float(floor), e_spec.lambda_min)
    block_min, _ = _lazy_block_minimum(space, 1 / factor, tol)
    report.add("blocks (1 - delta) I + delta S_N, delta = (2d/(2d+1))^2, are PSD", -tol, block_min)
    if d >= 2:
        corollary = Fraction(4 * d * d, 4 * d * d - 4 * d - 1)
        report.values["corollary_bound"] = corollary
        gap = 1.0 + e_spec.lambda_min
        report.add("(1 + lambda_min)^-1 <= 4d^2/(4d^2-4d-1)", 1.0 / gap if gap > 0 else math.inf, float(corollary))
        report.add("4d^2/(4d^2-4d-1) <= 5/2", float(corollary), 2.5)
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/comparison.ipynb #27f9c3e6
def verify_k_curveball_bounds(
    space: StateSpace,  # enumerated states
    k: int,  # pairs traded per step, 2k <= m
    tol: float = EIGEN_TOL,  # tolerance
    strict: bool = True,  # raise on failure
    with_blocks: bool = True  # also check every kappa block spectrum against the closed form
) -> ComparisonReport: # rel_c / k <= rel_kc <= rel_c
    """Sandwich the k-Curveball relaxation time between rel_c / k and rel_c.

    Both ratios rel_kc / (rel_c / k) and rel_kc / rel_c are reported; either bound can be attained.
    """
    chain = ChainSpec(ChainKind.K_CURVEBALL, k=k).check_for(space.spec)
    report = ComparisonReport(f"k-Curveball vs Curveball relaxation (k = {k})", tol=tol)
    if space.N == 1:
        report.vacuous = True
        report.notes.append("single state: nothing to compare")
        return report
    _, c_spec = _chain_spectrum(space, CURVEBALL, tol)
    if not _require_irreducible(report, "Curveball", c_spec, strict):
        return report
    _, kc_spec = _chain_spectrum(space, chain, tol)
    rel_c, rel_kc = c_spec.relaxation_1, kc_spec.relaxation_1
    report.values.update(rel_curveball=rel_c, rel_k_curveball=rel_kc, lower_ratio=rel_kc / (rel_c / k),
                         upper_ratio=rel_kc / rel_c)
    report.add("rel_c / k <= rel_kc <= rel_c", rel_c / k, rel_c, middle=rel_kc)
    if with_blocks:
        worst = 0.0
        for kappa in enumerate_kappas(space.spec.m, k):
            for hood in kappa_partition(space, kappa):
                numeric = eigendecompose_symmetric(kappa_block(space, hood).astype(np.float64), tol).eigenvalues
                closed = np.array([float(x) for x in tensor_block_spectrum(hood.factor_sizes)])
                worst = max(worst, float(np.abs(numeric - closed).max()))
        report.values["tensor_block_error"] = worst
        report.add("kappa block spectra match the tensor-product closed form", worst, tol)
    if strict:
        report.raise_if_failed()
    return report

# %% ../../nbs/spectral/comparison.ipynb #b5a0e9c2
def component_spectra(
    P: TransitionMatrix,  # matrix of a possibly reducible chain
    components: Sequence[Sequence[int]],  # closed classes, e.g. from check_irreducibility
    tol: float = EIGEN_TOL  # tolerance
) -> list[Spectrum]: # spectrum of the chain restricted to each component
    return [spectral_report(P.restrict(c), tol) for c in components]
