"""Validated settings shared by every command-line subcommand."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/cli/config.ipynb.

# %% ../../nbs/cli/config.ipynb #7b3e90c4
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Optional

from .. import __version__
from ..core.errors import CurvemixError
from ..core.margins import MarginSpec, load_instance
from ..samplers.chains import ChainSpec, parse_chain
from ..spectral.eigen import EIGEN_TOL
from ..statespace.enumeration import max_states_from_env

# %% auto #0
__all__ = ['SUBCOMMANDS', 'FORMATS', 'DEFAULT_EPSILONS', 'CliConfig']

# %% ../../nbs/cli/config.ipynb #c2a5d1f8
SUBCOMMANDS = ("enumerate", "sample", "matrix", "spectrum", "compare", "mix", "verify")
FORMATS = ("json", "csv", "table")
DEFAULT_EPSILONS = (0.25, 0.05, 0.01)  # mixing targets checked by verify

@dataclass
class CliConfig:
    """Settings of one invocation."""

    # Command
    subcommand: str  # one of SUBCOMMANDS
    instance: Optional[str] = None  # path to an instance JSON file

    # Chain
    chain: str = "curveball"  # chain descriptor, see parse_chain
    k: int = 2  # pairs per step for the k-Curveball checks of verify and compare

    # Sampling
    seed: int = 0  # master seed
    steps: int = 100  # steps per run
    count: int = 1  # samples printed by sample

    # Mixing
    epsilon: float = 0.25  # target TV distance of mix
    horizon: Optional[int] = None  # scan limit of mix, 10 * ceil(rel * ln(4N)) when None

    # Checks and output
    tol: float = EIGEN_TOL  # eigenvalue and inequality tolerance
    fmt: str = "json"  # one of FORMATS
    full: bool = False  # include eigenvalue lists and d(t) curves
    max_states: Optional[int] = None  # enumeration cap, CURVEMIX_MAX_STATES or the default when None

    def __post_init__(self):
        """Reject invalid settings before any work is done."""
        if self.subcommand not in SUBCOMMANDS:
            raise CurvemixError(f"Unknown subcommand {self.subcommand!r}; expected one of {', '.join(SUBCOMMANDS)}")
        if self.fmt not in FORMATS:
            raise CurvemixError(f"Unknown format {self.fmt!r}; expected one of {', '.join(FORMATS)}")
        if self.instance is None:
            raise CurvemixError(f"{self.subcommand} needs an instance file")
        if not Path(self.instance).is_file():
            raise CurvemixError(f"Instance file not found: {self.instance}")
        if self.steps < 0 or self.count < 1 or self.k < 1:
            raise CurvemixError(f"Need steps >= 0, count >= 1 and k >= 1 (got {self.steps}, {self.count}, {self.k})")
        if self.epsilon <= 0:
            raise CurvemixError(f"epsilon must be positive, got {self.epsilon}")
        if self.tol <= 0:
            raise CurvemixError(f"tol must be positive, got {self.tol}")
        if self.horizon is not None and self.horizon < 0:
            raise CurvemixError(f"horizon must be non-negative, got {self.horizon}")
        if self.max_states is None:
            self.max_states = max_states_from_env()
        elif self.max_states < 1:
            raise CurvemixError(f"max_states must be positive, got {self.max_states}")
        self.chain_spec  # parse now so a bad descriptor fails here

    @cached_property
    def chain_spec(self) -> ChainSpec: # parsed chain descriptor
        return parse_chain(self.chain)

    @cached_property
    def spec(self) -> MarginSpec: # loaded and validated instance
        return load_instance(self.instance)

    def header(self) -> dict: # fields stamped on every JSON report
        return dict(version=__version__, tol=self.tol, instance=self.instance)
