"""
Utility modules.
"""

from .logger import Logger
from .errors import (
    WalkError,
    ContractViolation,
    DomainError,
    ConfigError,
    GrowthError,
    NumericalError,
    PartialResultsError,
    exit_code_for,
)

__all__ = [
    'Logger',
    'WalkError',
    'ContractViolation',
    'DomainError',
    'ConfigError',
    'GrowthError',
    'NumericalError',
    'PartialResultsError',
    'exit_code_for',
]
