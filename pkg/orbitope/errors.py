"""Exception hierarchy; every failure carries the exit status the CLI reports."""

from __future__ import annotations


class OrbitopeError(Exception):
    """Base error with a human-readable detail and a process exit code."""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InputError(OrbitopeError, ValueError):
    """Malformed or out-of-range input (usage error)."""

    exit_code = 2


class ValidationFailure(InputError):
    """A vector handed in is not the f- or h-vector of a polytope."""


class GuardViolation(OrbitopeError):
    """An oracle run would exceed the configured size guard."""

    exit_code = 3


class InvariantViolation(OrbitopeError, ArithmeticError):
    """Internal arithmetic invariant broken; never raised for valid input."""

    exit_code = 1
