"""Exception types for the calculator.

Every failure mode that a caller can usefully distinguish gets its own
class; the CLI maps these onto exit codes (1 = bad input, 2 = a
verification/certification check failed, 3 = numeric non-convergence).
"""


class TorsionBoundsError(Exception):
    """Base class for all package errors."""


class InvalidArgument(TorsionBoundsError, ValueError):
    """A precondition on user-supplied input was violated."""


class InternalError(TorsionBoundsError):
    """A self-certification assertion failed.

    These guard identities that are mathematically guaranteed (e.g. the
    divisor sum in the rank formula being divisible by N); if one fires,
    the implementation is wrong, not the input.
    """


class RootStructureViolation(TorsionBoundsError):
    """The root multiset does not show the guaranteed max-modulus orbit."""


class NumericFailure(TorsionBoundsError):
    """An iterative numeric method did not converge within its cap."""


class DimensionMismatch(TorsionBoundsError):
    """A brute-force basis count disagrees with the exact rank formula."""


class OracleInconsistency(TorsionBoundsError):
    """Two independent computation routes disagree."""


class DegreeLimitExceeded(TorsionBoundsError):
    """An operation would leave the configured degree range."""


class CoverageViolation(TorsionBoundsError):
    """A covering certificate failed brute-force verification."""


class ParameterMismatch(TorsionBoundsError):
    """Space parameters do not instantiate the requested catalog entry."""
