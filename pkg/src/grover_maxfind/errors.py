# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/errors.py

"""
Exception hierarchy.

The CLI maps InputError and DomainError to exit code 2 and
InvariantViolation to exit code 3.
"""

from pathlib import Path
from typing import Optional


class MaxFindError(Exception):
    """Base exception for grover-maxfind."""
    pass


class InputError(MaxFindError):
    """Raised when caller-supplied input is unusable."""
    pass


class TableFormatError(InputError):
    """Raised when a table file line cannot be parsed."""

    def __init__(self, message: str, path: Optional[Path] = None, line_number: Optional[int] = None):
        if line_number is not None:
            where = f"{path}:{line_number}" if path else f"line {line_number}"
            message = f"{where}: {message}"
        super().__init__(message)
        self.path = path
        self.line_number = line_number


class DuplicateValueError(InputError):
    """Raised when a table holds the same value twice."""
    pass


class SizeError(InputError):
    """Raised when a register size falls outside the simulator cap."""
    pass


class OracleIndexError(InputError, IndexError):
    """Raised when a guess index is outside the table."""
    pass


class DomainError(MaxFindError, ValueError):
    """Raised when an analysis argument is outside its domain."""
    pass


class InvariantViolation(MaxFindError):
    """Raised when a checked invariant does not hold."""
    pass
