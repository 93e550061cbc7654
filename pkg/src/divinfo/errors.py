"""Exception types shared across the package."""


class InvalidDistributionError(ValueError):
    """A probability vector violates non-negativity or normalization."""


class DimensionMismatchError(ValueError):
    """Two objects that must share a support size do not."""


class TooLargeForExhaustiveError(ValueError):
    """Exhaustive event enumeration was requested beyond the size cap."""


class NotComputableExactlyError(ValueError):
    """No exact strategy applies (non-uniform average, support too large)."""


class ConvergenceFailureError(RuntimeError):
    """An iterative solver exceeded its iteration or bracket budget."""


class NotPositiveSemidefiniteError(ValueError):
    """A matrix has an eigenvalue below the negativity tolerance."""


class PreconditionViolatedError(ValueError):
    """A checker was invoked outside its stated parameter regime."""


class DomainError(ValueError):
    """A bound formula was evaluated outside its domain of definition."""
