"""Console entry points: one script per subcommand plus the `curvemix` dispatcher."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/cli/scripts.ipynb.

# %% ../../nbs/cli/scripts.ipynb #4f0b8e21
import logging
import sys
from typing import Optional

from fastcore.script import anno_parser, call_parse

from ..core.errors import CurvemixError, ExitCode
from .commands import run_command
from .config import CliConfig

# %% auto #0
__all__ = ['curvemix_enumerate', 'curvemix_sample', 'curvemix_matrix', 'curvemix_spectrum', 'curvemix_compare',
           'curvemix_mix', 'curvemix_verify', 'SCRIPTS', 'curvemix']

# %% ../../nbs/cli/scripts.ipynb #a1d6c370
logger = logging.getLogger(__name__)

def _main(
    subcommand: str,  # one of SUBCOMMANDS
    verbose: bool = False,  # log progress to stderr
    **kwargs  # remaining CliConfig fields
) -> int: # process exit code
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(asctime)s - %(levelname)s - %(message)s")
    try:
        cfg = CliConfig(subcommand, **kwargs)
    except CurvemixError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return int(e.exit_code)
    return run_command(cfg)

# %% ../../nbs/cli/scripts.ipynb #e83c5a9d
@call_parse
def curvemix_enumerate(
    instance: str,  # instance JSON file
    fmt: str = "json",  # output format: json, csv or table
    max_states: int = None,  # enumeration cap
    verbose: bool = False  # log progress to stderr
):
    "List every state of an instance."
    return _main("enumerate", verbose, instance=instance, fmt=fmt, max_states=max_states)

@call_parse
def curvemix_sample(
    instance: str,  # instance JSON file
    chain: str = "curveball",  # chain descriptor, e.g. ktv, gamma:1/3, kcurveball:2, edge-lazy:1/2
    steps: int = 100,  # steps per sample
    count: int = 1,  # number of samples
    seed: int = 0,  # master seed
    fmt: str = "table",  # output format: json, csv or table
    max_states: int = None,  # cap for the exact gamma check
    verbose: bool = False  # log progress to stderr
):
    "Print endpoint samples of independent chain runs."
    return _main("sample", verbose, instance=instance, chain=chain, steps=steps, count=count, seed=seed, fmt=fmt,
                 max_states=max_states)

@call_parse
def curvemix_matrix(
    instance: str,  # instance JSON file
    chain: str = "curveball",  # chain descriptor
    fmt: str = "csv",  # output format: csv or json
    max_states: int = None,  # enumeration cap
    verbose: bool = False  # log progress to stderr
):
    "Write the exact transition matrix."
    return _main("matrix", verbose, instance=instance, chain=chain, fmt=fmt, max_states=max_states)

@call_parse
def curvemix_spectrum(
    instance: str,  # instance JSON file
    chain: str = "curveball",  # chain descriptor
    full: bool = False,  # include every eigenvalue
    tol: float = 1e-9,  # eigenvalue tolerance
    fmt: str = "json",  # output format: json, csv or table
    max_states: int = None,  # enumeration cap
    verbose: bool = False  # log progress to stderr
):
    "Report the spectrum and relaxation time of a chain."
    return _main("spectrum", verbose, instance=instance, chain=chain, full=full, tol=tol, fmt=fmt,
                 max_states=max_states)

@call_parse
def curvemix_compare(
    instance: str,  # instance JSON file
    k: int = 2,  # pairs per k-Curveball step
    tol: float = 1e-9,  # inequality tolerance
    fmt: str = "table",  # output format: json, csv or table
    max_states: int = None,  # enumeration cap
    verbose: bool = False  # log progress to stderr
):
    "Check every relaxation-time comparison that applies to the instance."
    return _main("compare", verbose, instance=instance, k=k, tol=tol, fmt=fmt, max_states=max_states)

@call_parse
def curvemix_mix(
    instance: str,  # instance JSON file
    chain: str = "curveball",  # chain descriptor of an aperiodic chain
    epsilon: float = 0.25,  # target TV distance
    horizon: int = None,  # scan limit
    full: bool = False,  # include the d(t) curve in JSON output
    tol: float = 1e-9,  # eigenvalue tolerance
    fmt: str = "json",  # output format: json, csv (the d(t) curve) or table
    max_states: int = None,  # enumeration cap
    verbose: bool = False  # log progress to stderr
):
    "Compute the mixing time and check it against its spectral bounds."
    return _main("mix", verbose, instance=instance, chain=chain, epsilon=epsilon, horizon=horizon, full=full,
                 tol=tol, fmt=fmt, max_states=max_states)

@call_parse
def curvemix_verify(
    instance: str,  # instance JSON file
    k: int = 2,  # pairs per k-Curveball step
    full: bool = False,  # include eigenvalue lists of reducible components
    tol: float = 1e-9,  # inequality tolerance
    fmt: str = "table",  # output format: json, csv or table
    max_states: int = None,  # enumeration cap
    verbose: bool = False  # log progress to stderr
):
    "Run the full verification suite."
    return _main("verify", verbose, instance=instance, k=k, full=full, tol=tol, fmt=fmt, max_states=max_states)

# %% ../../nbs/cli/scripts.ipynb #5c27f4b0
SCRIPTS = dict(enumerate=curvemix_enumerate, sample=curvemix_sample, matrix=curvemix_matrix,
               spectrum=curvemix_spectrum, compare=curvemix_compare, mix=curvemix_mix, verify=curvemix_verify)

def curvemix(
    argv: Optional[list[str]] = None  # arguments after the program name, sys.argv[1:] when None
) -> int: # process exit code
    """`curvemix <subcommand> ...`: parse the subcommand's own flags and run it."""
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] not in SCRIPTS:
        sys.stderr.write(f"usage: curvemix {{{','.join(SCRIPTS)}}} [options]\n")
        return int(ExitCode.USAGE)
    script = SCRIPTS[argv[0]]
    parser = anno_parser(script.__wrapped__, prog=f"curvemix {argv[0]}")
    try:
        args = vars(parser.parse_args(argv[1:]))
    except SystemExit as e:
        return int(ExitCode.OK if e.code == 0 else ExitCode.USAGE)
    args.pop("xtra", None)
    args.pop("pdb", None)
    return script.__wrapped__(**args)
