"""Multi-step chain runs, deterministic in (start state, chain, steps, seed)."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/samplers/runner.ipynb.

# %% ../../nbs/samplers/runner.ipynb #5e8d2c61
from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import partial

from ..core.errors import InstanceError
from ..core.margins import MarginSpec
from ..core.matrix import BinaryMatrix
from .chains import ChainKind, ChainSpec
from .rng import RngStream
from .steps import (StepFn, EdgeSwitcher, step_gamma_switch, step_ktv_classic, step_curveball, step_k_curveball,
                    step_edge_switch, step_lazy)

# %% auto #0
__all__ = ['ChainRun', 'make_stepper', 'run_chain', 'sample_endpoints']

# %% ../../nbs/samplers/runner.ipynb #b0e74f39
logger = logging.getLogger(__name__)

# %% ../../nbs/samplers/runner.ipynb #21a6c8de
def make_stepper(
    chain: ChainSpec,  # chain to realize
    spec: MarginSpec  # instance it runs on
) -> StepFn: # step(A, rng) -> next state
    """Bind a chain descriptor to its step function."""
    chain.check_for(spec)
    kind = chain.kind
    if kind in (ChainKind.GAMMA_SWITCH, ChainKind.KTV_SWITCH):
        step = partial(_gamma_step, gamma=chain.gamma_for(spec))
    elif kind is ChainKind.KTV_CLASSIC:
        step = step_ktv_classic
    elif kind is ChainKind.CURVEBALL:
        step = step_curveball
    elif kind is ChainKind.K_CURVEBALL:
        step = partial(_k_curveball_step, k=chain.k)
    else:
        step = step_edge_switch
    if chain.laziness is not None:
        return partial(_lazy_step, inner=step, delta=chain.laziness)
    return step

def _lazy_step(A, rng, *, inner, delta):
    return step_lazy(A, inner, delta, rng)

def _gamma_step(A, rng, *, gamma):
    return step_gamma_switch(A, gamma, rng)

def _k_curveball_step(A, rng, *, k):
    return step_k_curveball(A, k, rng)

# %% ../../nbs/samplers/runner.ipynb #98cf1d04
@dataclass(frozen=True)
class ChainRun:
    """Result of one chain run."""

    chain: ChainSpec  # chain that was run
    steps: int  # number of steps taken
    seed: int  # seed of the stream that drove the run
    final: BinaryMatrix  # state after the last step
    trajectory: tuple[BinaryMatrix, ...] = ()  # every thin-th state, starting with the initial one

def run_chain(
    A0: BinaryMatrix,  # initial state
    chain: ChainSpec,  # chain to run
    steps: int,  # number of steps T
    seed: int | RngStream,  # seed or stream
    thin: int = 0,  # record every thin-th state (0 records nothing)
    validate: bool = False  # re-check the full instance after every step
) -> ChainRun: # final state and optional trajectory
    """Run a chain for a fixed number of steps."""
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    A0.check()
    rng = seed if isinstance(seed, RngStream) else RngStream(seed)
    trajectory = [A0] if thin else []
    # the edge-switch chain keeps its one-position list across steps
    switcher = EdgeSwitcher(A0) if chain.kind is ChainKind.EDGE_SWITCH and chain.laziness is None else None
    step = None if switcher else make_stepper(chain, A0.parent_spec)
    A = A0
    for t in range(1, steps + 1):
        if switcher:
            switcher.step(rng)
            if thin and t % thin == 0 or validate or t == steps:
                A = switcher.matrix
        else:
            A = step(A, rng)
        if validate and not A.satisfies_spec():
            raise InstanceError(f"Step {t} of {chain} left the state space: {A.violations()}")
        if thin and t % thin == 0:
            trajectory.append(A)
    logger.debug("Ran %s for %d steps (seed %d)", chain, steps, rng.seed)
    return ChainRun(chain, steps, rng.seed, A, tuple(trajectory))

def sample_endpoints(
    A0: BinaryMatrix,  # initial state of every run
    chain: ChainSpec,  # chain to run
    steps: int,  # steps per run
    count: int,  # number of independent runs
    seed: int,  # master seed; run w uses the w-th spawned stream
    validate: bool = False  # re-check the instance after every step
) -> list[BinaryMatrix]: # final state of each run
    """Independent endpoint samples, one spawned stream per run."""
    streams = RngStream(seed).spawn(count)
    return [run_chain(A0, chain, steps, stream, validate=validate).final for stream in streams]
