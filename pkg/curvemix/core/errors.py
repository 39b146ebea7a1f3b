"""Exception hierarchy shared by every curvemix module, with cli exit codes."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/errors.ipynb.

# %% ../../nbs/core/errors.ipynb #4c1e07a2
from __future__ import annotations
from enum import IntEnum

# %% auto #0
__all__ = ['ExitCode', 'CurvemixError', 'InstanceError', 'MarginMismatch', 'InfeasibleRow', 'InfeasibleColumn',
           'ForbiddenOutOfRange', 'DuplicateForbidden', 'IndexOutOfRange', 'SpecMismatch', 'MoveError',
           'NotACheckerboard', 'ForbiddenEntryTouched', 'BadTradeSet', 'ChainError', 'AssumptionViolated', 'KTooLarge',
           'BadDelta', 'BadChainDescriptor', 'OverlappingPairs', 'StateSpaceError', 'EmptyStateSpace',
           'StateSpaceTooLarge', 'NotIsomorphic', 'SpectralError', 'ReconstructionMismatch', 'BadPQ', 'NoConvergence',
           'NotSymmetric', 'NotReversible', 'CheckFailed', 'ConditionFailed', 'NegativeEigenvalue', 'NotRegular',
           'NegativeLazySpectrum', 'InconsistentVerdict', 'BoundViolated', 'Reducible', 'PeriodicChain', 'MixingError',
           'LengthMismatch', 'HorizonExceeded', 'MonotonicityViolated']

# %% ../../nbs/core/errors.ipynb #9a0f3d61
class ExitCode(IntEnum):
    """Process exit codes of the command-line scripts."""
    OK = 0
    USAGE = 2
    EMPTY_SPACE = 3
    TOO_LARGE = 4
    CHECK_FAILED = 5
    REDUCIBLE = 6  # also used for periodic chains

# %% ../../nbs/core/errors.ipynb #b7e2c915
class CurvemixError(Exception):
    """Base class for all curvemix errors."""
    exit_code: ExitCode = ExitCode.USAGE

# %% ../../nbs/core/errors.ipynb #05d8ce3f
class InstanceError(CurvemixError, ValueError):
    """An instance (margins + forbidden entries) or a matrix does not fit its spec."""

class MarginMismatch(InstanceError):
    """Row sums and column sums have different totals."""

class InfeasibleRow(InstanceError):
    """A row sum exceeds the number of allowed entries in that row."""

class InfeasibleColumn(InstanceError):
    """A column sum exceeds the number of allowed entries in that column."""

class ForbiddenOutOfRange(InstanceError):
    """A forbidden entry lies outside the matrix."""

class DuplicateForbidden(InstanceError):
    """The same forbidden entry is listed twice."""

class IndexOutOfRange(InstanceError, IndexError):
    """A row or column index is outside the matrix or a row pair is not ordered."""

class SpecMismatch(InstanceError):
    """Two matrices (or a matrix and a space) belong to different instances."""

# %% ../../nbs/core/errors.ipynb #e61a2b70
class MoveError(CurvemixError, ValueError):
    """A switch or trade cannot be applied to the given matrix."""

class NotACheckerboard(MoveError):
    """The selected 2x2 block is neither C1 nor C2."""

class ForbiddenEntryTouched(MoveError):
    """The move would place a one on a forbidden entry."""

class BadTradeSet(MoveError):
    """The trade set has the wrong size or leaves the trade columns."""

# %% ../../nbs/core/errors.ipynb #7d4b9c08
class ChainError(CurvemixError, ValueError):
    """Chain parameters are invalid for the instance."""

class AssumptionViolated(ChainError):
    """Some state and row pair have u*l*gamma >= 1."""
    exit_code = ExitCode.CHECK_FAILED

class KTooLarge(ChainError):
    """k disjoint row pairs do not fit in m rows."""

class BadDelta(ChainError):
    """A laziness parameter outside the open interval (0, 1)."""

class BadChainDescriptor(ChainError):
    """A chain descriptor string that does not parse."""

class OverlappingPairs(ChainError):
    """The row pairs of a collection are not pairwise disjoint."""

# %% ../../nbs/core/errors.ipynb #c3a81f57
class StateSpaceError(CurvemixError):
    """Enumeration of the state space failed."""

class EmptyStateSpace(StateSpaceError):
    """No binary matrix satisfies the instance."""
    exit_code = ExitCode.EMPTY_SPACE

class StateSpaceTooLarge(StateSpaceError):
    """The state space (or an exact construction over it) exceeds the configured cap."""
    exit_code = ExitCode.TOO_LARGE

class NotIsomorphic(StateSpaceError):
    """A binomial neighborhood is not isomorphic to its Johnson graph."""
    exit_code = ExitCode.CHECK_FAILED

# %% ../../nbs/core/errors.ipynb #1f6e0b94
class SpectralError(CurvemixError, ArithmeticError):
    """A matrix identity or a numerical decomposition failed."""
    exit_code = ExitCode.CHECK_FAILED

class ReconstructionMismatch(SpectralError):
    """A block decomposition does not sum back to its transition matrix."""

class BadPQ(SpectralError, ValueError):
    """Johnson graph parameters outside 1 <= q <= p."""
    exit_code = ExitCode.USAGE

class NoConvergence(SpectralError):
    """The Jacobi solver hit its sweep cap."""

class NotSymmetric(SpectralError):
    """A matrix expected to be symmetric is not."""

class NotReversible(SpectralError):
    """A chain violates detailed balance with respect to its stationary distribution."""

# %% ../../nbs/core/errors.ipynb #8b5d2e3c
class CheckFailed(CurvemixError):
    """A verified inequality or identity does not hold."""
    exit_code = ExitCode.CHECK_FAILED

class ConditionFailed(CheckFailed):
    """The block eigenvalue condition of the heat-bath comparison fails."""

class NegativeEigenvalue(CheckFailed):
    """The KTV-switch chain has a negative eigenvalue."""

class NotRegular(CheckFailed, ValueError):
    """The instance is not square with constant row and column sums."""
    exit_code = ExitCode.USAGE

class NegativeLazySpectrum(CheckFailed):
    """The lazy chain still has a negative eigenvalue."""

class InconsistentVerdict(CheckFailed):
    """Dirichlet-form sampling and the PSD test disagree."""

class BoundViolated(CheckFailed):
    """A spectral mixing-time bound does not hold."""

class Reducible(CheckFailed):
    """The chain's state graph has more than one component."""
    exit_code = ExitCode.REDUCIBLE

class PeriodicChain(CheckFailed):
    """The chain has eigenvalue -1, so it never mixes."""
    exit_code = ExitCode.REDUCIBLE

# %% ../../nbs/core/errors.ipynb #f2c4a6d0
class MixingError(CurvemixError):
    """Distribution evolution or mixing-time computation failed."""
    exit_code = ExitCode.CHECK_FAILED

class LengthMismatch(MixingError, ValueError):
    """Two probability vectors live on different spaces."""
    exit_code = ExitCode.USAGE

class HorizonExceeded(MixingError):
    """The worst-case distance stayed above epsilon up to the horizon."""

class MonotonicityViolated(MixingError):
    """The worst-case distance to stationarity increased between two steps."""
