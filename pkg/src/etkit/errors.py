"""Exception taxonomy for etkit.

Every error raised by the library derives from :class:`EtkitError`, so
callers (and the CLI) can distinguish "your input is outside the method's
domain" from "the solver could not produce a result" with two except
clauses.
"""

from __future__ import annotations


class EtkitError(Exception):
    """Base class for all etkit errors."""


class DomainError(EtkitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ShapeError(EtkitError, ValueError):
    """Quantum-number lists do not have the N-1 entries the system requires."""


class NoSolution(EtkitError, RuntimeError):
    """The radius equation has no root inside the search range."""


class AmbiguousSolution(EtkitError, RuntimeError):
    """The radius equation has several roots and no selection rule applies.

    ``brackets`` holds the (lo, hi) intervals that were found to contain
    a root, in increasing order.
    """

    def __init__(self, message: str, brackets: list[tuple[float, float]]):
        super().__init__(message)
        self.brackets = brackets


class NegativeStiffness(EtkitError, RuntimeError):
    """The radial mode around the circular orbit is unstable (A^2 < 0)."""


class DegenerateSlope(EtkitError, RuntimeError):
    """The slope denominator vanishes; the optimum radius is degenerate."""


class PhiUndefined(EtkitError, RuntimeError):
    """phi cannot be formed because the orbital quantum number is zero."""


class NoBoundState(EtkitError, RuntimeError):
    """The requested state is not bound for these parameters."""


class UnboundRegime(EtkitError, RuntimeError):
    """Closed-form energy is undefined: the radicand is non-positive."""


class ConvergenceError(EtkitError, RuntimeError):
    """An iterative scheme failed to reach its tolerance."""
