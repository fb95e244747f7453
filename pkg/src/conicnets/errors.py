"""Exception taxonomy shared across the package.

Plain ValueError covers malformed arguments (usage and domain errors).
The classes below mark conditions the command line maps to distinct exit
codes or that verification code must be able to tell apart.
"""

from __future__ import annotations


class OutOfFamilyError(ValueError):
    """A plane outside the classified family (it misses the nucleus plane)."""


class ConfigurationError(RuntimeError):
    """No parameter value satisfies a representative's constraints, or a
    constructed representative fails its validation; never silently
    substituted."""


class ClassificationError(RuntimeError):
    """Internal consistency failure: an input matched no class, or an
    invariant computation met a configuration it cannot name."""


class VerificationError(RuntimeError):
    """A verification suite ran to completion and found a violated claim."""


class ResourceBudgetError(RuntimeError):
    """An orbit enumeration exceeded its memory budget.

    ``partial`` carries the number of keys discovered before the abort so
    reports can show progress.
    """

    def __init__(self, message: str, partial: int = 0):
        super().__init__(message)
        self.partial = partial
