"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`ArscopeError`
and carries an ``exit_code`` used by the command-line front end.
"""


class ArscopeError(Exception):
    exit_code = 3


class InputError(ArscopeError, ValueError):
    """Arguments violate an operation's preconditions."""

    exit_code = 1


class DataError(ArscopeError, ValueError):
    """Unreadable, unparseable or empty data."""

    exit_code = 2


class DomainError(ArscopeError, ValueError):
    """Model outside the supported domain, e.g. a non-stationary AR part."""


class NumericalError(ArscopeError, ArithmeticError):
    """Singular systems, overflow, non-finite intermediate values."""


class DegenerateSeriesError(NumericalError):
    """Zero-variance series: autocorrelations are undefined."""


class DegenerateInputError(NumericalError):
    """Singular Toeplitz system in a Yule-Walker solve."""


class IllConditionedProfileError(NumericalError):
    """Non-positive prediction variance inside the Levinson-Durbin recursion."""

    def __init__(self, message, order):
        super().__init__(message)
        self.order = order


class UnsupportedCaseError(NumericalError):
    """Documented but unimplemented case (repeated characteristic roots)."""
