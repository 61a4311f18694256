"""Exception types shared across the package.

Every error a caller might want to branch on lives here; modules raise
these rather than bare ValueErrors so the command line front end can map
them onto exit codes.
"""


class CspLabError(Exception):
    """Base class for all package errors."""


class PreconditionError(CspLabError, ValueError):
    """An argument violates a documented precondition."""


class InexactDivision(CspLabError, ArithmeticError):
    """Polynomial division left a nonzero remainder.

    Raised when a closed formula that should produce a polynomial was
    mis-instantiated; never expected from the built-in constructors.
    """


class NonIntegerEvaluation(CspLabError, ArithmeticError):
    """A root-of-unity evaluation is not a rational integer.

    Signals that the residue modulo the cyclotomic polynomial is
    non-constant, i.e. the candidate polynomial cannot count fixed points.
    """


class NegativeExponent(CspLabError, ArithmeticError):
    """A Laurent polynomial was coerced where an ordinary one was required."""


class CapExceeded(CspLabError):
    """An enumeration request is larger than the configured cap."""


class UnknownFamily(CspLabError, KeyError):
    """Requested sieving family is not registered."""


class NotNearlyFree(CspLabError, ValueError):
    """Supplied generator has a cycle structure that is neither free nor
    nearly free, so the subset/multiset sieving theorems do not apply."""


class NonCommutingActions(CspLabError, ValueError):
    """The two generators of a bicyclic check do not commute."""


class StatisticMismatch(CspLabError, ValueError):
    """A statistic's generating function disagrees with the instance
    polynomial, so a block-partition certificate cannot be checked."""


class InternalInvariantError(CspLabError, AssertionError):
    """An internal consistency check failed (a bug, not a usage error)."""
