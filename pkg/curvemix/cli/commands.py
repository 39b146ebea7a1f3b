"""The subcommands behind the command-line scripts: each renders one report on a text stream and returns an exit code."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/cli/commands.ipynb.

# %% ../../nbs/cli/commands.ipynb #0e6c4b3d
from __future__ import annotations
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Callable, Optional, TextIO

import numpy as np

from ..core.errors import CheckFailed, CurvemixError, ExitCode, MixingError
from ..samplers.chains import CURVEBALL, EDGE, KTV, ChainKind
from ..samplers.runner import sample_endpoints
from ..samplers.steps import check_gamma_assumption
from ..spectral.comparison import (ComparisonReport, component_spectra, verify_edge_comparison,
                                   verify_k_curveball_bounds, verify_ktv_nonneg, verify_regular_bounds,
                                   verify_relaxation_comparison)
from ..spectral.decomposition import decompose_switch
from ..spectral.eigen import eigendecompose_symmetric, spectral_report
from ..spectral.transitions import build_heat_bath, build_transition
from ..statespace.enumeration import StateSpace, enumerate_states, find_initial_state
from ..statespace.graph import build_state_graph, check_irreducibility, check_johnson_isomorphism
from ..mixing.bounds import check_mixing_bounds
from .config import DEFAULT_EPSILONS, CliConfig

# %% auto #0
__all__ = ['cmd_enumerate', 'cmd_sample', 'cmd_matrix', 'cmd_spectrum', 'cmd_compare', 'cmd_mix', 'cmd_verify',
           'COMMANDS', 'run_command']

# %% ../../nbs/cli/commands.ipynb #58a1f7e2
logger = logging.getLogger(__name__)

def _dump(payload: dict, out: TextIO):
    out.write(json.dumps(payload, indent=2) + "\n")

def _space(cfg: CliConfig) -> StateSpace:
    return enumerate_states(cfg.spec, cfg.max_states)

def _rows(A) -> list[str]:
    return str(A).splitlines()

# %% ../../nbs/cli/commands.ipynb #a4e03b96
def cmd_enumerate(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode: # OK; enumeration errors propagate before anything is written
    """List every state of the instance in canonical order."""
    space = _space(cfg)
    if cfg.fmt == "json":
        _dump(dict(cfg.header(), N=space.N, keys=[A.key.hex() for A in space],
                   states=[A.to_lists() for A in space]), out)
    elif cfg.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["index", "key", "rows"])
        for t, A in enumerate(space):
            writer.writerow([t, A.key.hex(), " ".join(_rows(A))])
    else:
        out.write(f"N={space.N}\n")
        for A in space:
            out.write(f"{A.key.hex()}  {' '.join(_rows(A))}\n")
    return ExitCode.OK

def cmd_sample(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode:
    """Endpoints of cfg.count independent runs of cfg.steps steps from the first state."""
    spec, chain = cfg.spec, cfg.chain_spec
    chain.check_for(spec)
    if chain.kind in (ChainKind.GAMMA_SWITCH, ChainKind.KTV_SWITCH):
        gamma = chain.gamma_for(spec)
        if not check_gamma_assumption(spec, gamma).holds:
            check_gamma_assumption(spec, gamma, "exact", cfg.max_states, strict=True)
    A0 = find_initial_state(spec)
    samples = sample_endpoints(A0, chain, cfg.steps, cfg.count, cfg.seed)
    if cfg.fmt == "json":
        _dump(dict(cfg.header(), chain=chain.describe(), steps=cfg.steps, seed=cfg.seed,
                   samples=[A.to_lists() for A in samples]), out)
    elif cfg.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["sample", "row", "bits"])
        for w, A in enumerate(samples):
            writer.writerows([w, i + 1, bits] for i, bits in enumerate(_rows(A)))
    else:
        out.write("\n\n".join(str(A) for A in samples) + "\n")
    return ExitCode.OK

def cmd_matrix(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode:
    """Exact transition matrix as "p/q" strings."""
    P = build_transition(_space(cfg), cfg.chain_spec)
    if cfg.fmt == "json":
        cells = [[f"{x.numerator}/{x.denominator}" for x in row] for row in P.entries]
        _dump(dict(cfg.header(), chain=P.label, N=P.N, entries=cells), out)
    else:
        P.to_csv(out)
    return ExitCode.OK

def cmd_spectrum(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode:
    """Spectrum summary of the chain; cfg.full adds every eigenvalue."""
    P = build_transition(_space(cfg), cfg.chain_spec)
    spectrum = spectral_report(P, cfg.tol)
    summary = spectrum.to_dict(full=cfg.full)
    if cfg.fmt == "json":
        _dump(dict(cfg.header(), chain=P.label, **summary), out)
    elif cfg.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["index", "eigenvalue"])
        writer.writerows([t, repr(float(x))] for t, x in enumerate(spectrum.eigenvalues))
    else:
        out.write(f"chain: {P.label}\n")
        out.write("".join(f"{k}: {v}\n" for k, v in summary.items()))
    return ExitCode.OK

def cmd_mix(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode: # CHECK_FAILED when tau falls outside the spectral bounds
    """Mixing time of the chain at cfg.epsilon with its spectral bounds."""
    P = build_transition(_space(cfg), cfg.chain_spec)
    report = check_mixing_bounds(P, cfg.epsilon, cfg.horizon, cfg.tol, strict=False)
    if cfg.fmt == "json":
        _dump(dict(cfg.header(), **report.to_dict(curve=cfg.full), passed=report.passed), out)
    elif cfg.fmt == "csv":
        report.to_csv(out)
    else:
        out.write("".join(f"{k}: {v}\n" for k, v in report.to_dict().items()))
    return ExitCode.OK if report.passed else ExitCode.CHECK_FAILED

# %% ../../nbs/cli/commands.ipynb #c39d6f01
def _comparisons(space: StateSpace, cfg: CliConfig) -> list[ComparisonReport]:
    """Every comparison result whose hypotheses fit the instance."""
    spec, tol = space.spec, cfg.tol
    reports = []
    if spec.n >= 3:
        reports.append(verify_ktv_nonneg(space, tol, strict=False))
        reports.append(verify_relaxation_comparison(space, tol, strict=False))
    if spec.m >= 2 and spec.rho_total >= 2:
        reports.append(verify_edge_comparison(space, tol, strict=False))
    if spec.is_square_regular():
        reports.append(verify_regular_bounds(space, tol, strict=False))
    if 2 * cfg.k <= spec.m:
        reports.append(verify_k_curveball_bounds(space, cfg.k, tol, strict=False))
    return reports

def _identities(space: StateSpace, cfg: CliConfig) -> list[ComparisonReport]:
    """Exact block decomposition, Johnson structure and the heat-bath identity."""
    spec, tol = space.spec, cfg.tol
    reports = []
    if spec.n >= 2 and spec.m >= 2:
        report = ComparisonReport("switch block decomposition", tol=tol)
        decomposition = decompose_switch(space, KTV.gamma_for(spec), strict=False)
        report.add("entries where the block sum differs from P_gamma", 0 if decomposition.exact else 1, 0)
        worst = 0.0
        for block in decomposition.all_blocks():
            check_johnson_isomorphism(block.hood, space)
            numeric = eigendecompose_symmetric(block.to_float(), tol).eigenvalues
            closed = np.array([float(x) for x in block.closed_form_spectrum()])
            worst = max(worst, float(np.abs(numeric - closed).max()))
        report.values.update(blocks=len(decomposition.all_blocks()), max_block_spectrum_error=worst)
        report.add("block spectra match the Johnson closed form", worst, tol)
        reports.append(report)
    report = ComparisonReport("heat-bath identity", tol=tol)
    mismatch = build_heat_bath(space).first_difference(build_transition(space, CURVEBALL))
    if mismatch is not None:
        report.notes.append(f"first difference at {mismatch[:2]}: {mismatch[2]} != {mismatch[3]}")
    report.add("entries where P_heat differs from P_c", 0 if mismatch is None else 1, 0)
    reports.append(report)
    return reports

def _mixing(space: StateSpace, cfg: CliConfig) -> list[ComparisonReport]:
    """Mixing-time sandwich of each aperiodic chain at the default targets."""
    spec, tol = space.spec, cfg.tol
    chains = [CURVEBALL] + ([KTV] if spec.n >= 3 else [])
    if spec.m >= 2 and spec.rho_total >= 2:
        chains.append(EDGE.lazy(Fraction(1, 2)))
    reports = []
    for chain in chains:
        P = build_transition(space, chain)
        report = ComparisonReport(f"mixing bounds ({chain})", tol=tol)
        for eps in DEFAULT_EPSILONS:
            try:
                mix = check_mixing_bounds(P, eps, tol=tol, strict=False)
            except (CheckFailed, MixingError) as e:
                report.notes.append(f"epsilon = {eps}: {type(e).__name__}: {e}")
                report.add(f"tau({eps}) computed", 0.0, -1.0)
                continue
            report.values[f"tau({eps})"] = mix.tau
            report.add(f"ceil(lower) - 1 <= tau({eps}) <= upper", float(np.ceil(mix.lower_bound - tol) - 1),
                       mix.upper_bound, middle=float(mix.tau))
        reports.append(report)
    return reports

def _render(cfg: CliConfig, reports: list[ComparisonReport], out: TextIO, extra: Optional[dict] = None):
    passed = all(r.passed for r in reports)
    if cfg.fmt == "json":
        _dump(dict(cfg.header(), passed=passed, reports=[r.to_dict() for r in reports], **(extra or {})), out)
    elif cfg.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["theorem", "passed", "vacuous", "reducible"])
        writer.writerows([r.theorem, r.passed, r.vacuous, r.reducible] for r in reports)
    else:
        out.write("\n".join(r.table() for r in reports) + "\n")
        for label, spectra in (extra or {}).items():
            out.write(f"{label}:\n" + "".join(f"    {s}\n" for s in spectra))
        out.write(f"{'PASS' if passed else 'FAIL'}\n")

def _verdict(reports: list[ComparisonReport]) -> ExitCode:
    if any(r.reducible for r in reports):
        return ExitCode.REDUCIBLE
    return ExitCode.OK if all(r.passed for r in reports) else ExitCode.CHECK_FAILED

def cmd_compare(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode:
    """Run every applicable relaxation-time comparison."""
    reports = _comparisons(_space(cfg), cfg)
    _render(cfg, reports, out)
    return _verdict(reports)

def cmd_verify(
    cfg: CliConfig,  # validated settings
    out: TextIO  # output stream
) -> ExitCode: # OK, CHECK_FAILED, or REDUCIBLE with per-component spectra
    """The full suite: exact identities, comparisons and mixing bounds.

    On a reducible instance only the exact identities run; the Curveball spectrum of every component
    is printed instead of the comparisons.
    """
    space = _space(cfg)
    components = check_irreducibility(build_state_graph(space, CURVEBALL))
    reports = _identities(space, cfg)
    if len(components) > 1:
        spectra = component_spectra(build_transition(space, CURVEBALL), components, cfg.tol)
        reducible = ComparisonReport("Curveball irreducibility", tol=cfg.tol, reducible=True)
        reducible.values["components"] = len(components)
        reducible.notes.extend(f"component {c}: {len(members)} states" for c, members in enumerate(components))
        reports.append(reducible)
        extra = dict(component_spectra=[s.to_dict(full=cfg.full) for s in spectra])
        _render(cfg, reports, out, extra)
        return ExitCode.REDUCIBLE
    reports += _comparisons(space, cfg) + _mixing(space, cfg)
    _render(cfg, reports, out)
    return _verdict(reports)

# %% ../../nbs/cli/commands.ipynb #7d52e8a0
COMMANDS: dict[str, Callable[[CliConfig, TextIO], ExitCode]] = dict(
    enumerate=cmd_enumerate, sample=cmd_sample, matrix=cmd_matrix, spectrum=cmd_spectrum, compare=cmd_compare,
    mix=cmd_mix, verify=cmd_verify)

def run_command(
    cfg: CliConfig,  # validated settings
    out: Optional[TextIO] = None  # output stream, stdout when None
) -> int: # process exit code
    """Dispatch to a subcommand and turn library errors into exit codes on stderr."""
    try:
        return int(COMMANDS[cfg.subcommand](cfg, out or sys.stdout))
    except CurvemixError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return int(e.exit_code)
