"""
Error types raised by the walk toolkit.

Each class carries the process exit code the command line maps it to.
"""

from typing import Any, Dict, Optional


class WalkError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class ContractViolation(WalkError, ValueError):
    """A documented precondition was broken by the caller."""

    exit_code = 2


class DomainError(WalkError, ValueError):
    """An argument lies outside the domain of the operation."""

    exit_code = 2


class ConfigError(WalkError, ValueError):
    """Invalid run configuration."""

    exit_code = 2


class GrowthError(WalkError, RuntimeError):
    """Amplitude reached the lattice edge and would be clipped."""

    exit_code = 3

    def __init__(self, message: str, step: Optional[int] = None):
        super().__init__(message)
        self.step = step


class NumericalError(WalkError, RuntimeError):
    """Solver failure or a numerical invariant breached."""

    exit_code = 3

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class PartialResultsError(WalkError, RuntimeError):
    """A run aborted part way; `partial` holds what was computed."""

    exit_code = 3

    def __init__(self, message: str, partial: Any = None, failed: Optional[Dict[Any, str]] = None):
        super().__init__(message)
        self.partial = partial
        self.failed = failed or {}


IO_EXIT_CODE = 4


def exit_code_for(error: BaseException) -> int:
    """Exit status for an exception raised during a command."""
    if isinstance(error, WalkError):
        return error.exit_code
    if isinstance(error, OSError):
        return IO_EXIT_CODE
    return 1
